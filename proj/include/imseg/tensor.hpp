#pragma once
// Dense 4-D (batch, channel, height, width) tensor, row-major, the universal
// value type of the library. Data is shared and treated as immutable once an
// operation has published its result; copies are cheap.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace imseg {

#ifdef IMSEG_SINGLE_PRECISION
using real = float;
#else
using real = double;
#endif

struct Shape4 {
    int n = 0, c = 0, h = 0, w = 0;

    std::size_t size() const {
        return static_cast<std::size_t>(n) * c * h * w;
    }
    bool operator==(const Shape4&) const = default;
    std::string str() const;
};

class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape4 s)
        : shape_(s), data_(std::make_shared<std::vector<real>>(s.size(), real(0))) {}
    Tensor(Shape4 s, std::vector<real> d);

    static Tensor zeros(Shape4 s) { return Tensor(s); }
    static Tensor full(Shape4 s, real v);
    static Tensor scalar(real v) { return full({1, 1, 1, 1}, v); }

    bool defined() const { return data_ != nullptr; }
    const Shape4& shape() const { return shape_; }
    int n() const { return shape_.n; }
    int c() const { return shape_.c; }
    int h() const { return shape_.h; }
    int w() const { return shape_.w; }
    std::size_t size() const { return shape_.size(); }

    const real* data() const { return data_->data(); }
    // Writable view, used while an op fills its freshly allocated result.
    real* raw() { return data_->data(); }

    real at(int in, int ic, int iy, int ix) const {
        return (*data_)[index(in, ic, iy, ix)];
    }
    real& at(int in, int ic, int iy, int ix) {
        return (*data_)[index(in, ic, iy, ix)];
    }
    std::size_t index(int in, int ic, int iy, int ix) const {
        return ((static_cast<std::size_t>(in) * shape_.c + ic) * shape_.h + iy) * shape_.w + ix;
    }

    // Scalar convenience for loss tensors.
    real item() const;

    const std::vector<real>& vec() const { return *data_; }

    // Same data buffer, new shape (sizes must match). Used by reshape ops.
    Tensor viewed_as(Shape4 s) const;

    int node() const { return node_; }
    void set_node(int id) { node_ = id; }

private:
    Shape4 shape_{};
    std::shared_ptr<std::vector<real>> data_;
    int node_ = -1;  // tape node id, -1 when untracked
};

// Throws if any element is non-finite; `op` names the producing operation.
void check_finite(const Tensor& t, const char* op);

}  // namespace imseg
