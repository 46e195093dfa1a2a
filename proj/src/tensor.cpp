#include "imseg/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace imseg {

std::string Shape4::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(c) + "," +
           std::to_string(h) + "," + std::to_string(w) + ")";
}

Tensor::Tensor(Shape4 s, std::vector<real> d) : shape_(s) {
    if (d.size() != s.size()) {
        throw std::invalid_argument("tensor data length " + std::to_string(d.size()) +
                                    " does not match shape " + s.str());
    }
    data_ = std::make_shared<std::vector<real>>(std::move(d));
}

Tensor Tensor::full(Shape4 s, real v) {
    Tensor t(s);
    for (auto& x : *t.data_) x = v;
    return t;
}

real Tensor::item() const {
    if (size() != 1) {
        throw std::invalid_argument("item() on non-scalar tensor " + shape_.str());
    }
    return (*data_)[0];
}

Tensor Tensor::viewed_as(Shape4 s) const {
    if (s.size() != size()) {
        throw std::invalid_argument("view " + s.str() + " incompatible with " + shape_.str());
    }
    Tensor t;
    t.shape_ = s;
    t.data_ = data_;
    return t;
}

void check_finite(const Tensor& t, const char* op) {
    for (const real v : t.vec()) {
        if (!std::isfinite(v)) {
            throw std::runtime_error(std::string("non-finite value produced by ") + op);
        }
    }
}

}  // namespace imseg
