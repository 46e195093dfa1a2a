// Runtime kernel selection. Picks the best variant the CPU supports; the
// IMSEG_KERNELS environment variable (scalar|avx2|neon) forces a choice.

#include <cstdlib>
#include <string>
#include <vector>

#include "imseg/kernels.hpp"

namespace imseg::kern {

const Kernels* avx2_kernels();
const Kernels* neon_kernels();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::vector<const Kernels*> build_available() {
    std::vector<const Kernels*> out;
    out.push_back(&scalar_kernels());
    if (const Kernels* k = avx2_kernels(); k && cpu_has_avx2()) out.push_back(k);
    if (const Kernels* k = neon_kernels()) out.push_back(k);
    return out;
}

const Kernels* pick_default(const std::vector<const Kernels*>& avail) {
    const Kernels* best = avail.front();
    for (const Kernels* k : avail) {
        if (std::string(k->name) != "scalar") best = k;
    }
    if (const char* env = std::getenv("IMSEG_KERNELS")) {
        for (const Kernels* k : avail) {
            if (std::string(k->name) == env) return k;
        }
    }
    return best;
}

const Kernels*& active_slot() {
    static std::vector<const Kernels*> avail = build_available();
    static const Kernels* current = pick_default(avail);
    return current;
}

}  // namespace

std::vector<const Kernels*> available() { return build_available(); }

const Kernels& active() { return *active_slot(); }

bool set_active(const std::string& name) {
    for (const Kernels* k : build_available()) {
        if (name == k->name) {
            active_slot() = k;
            return true;
        }
    }
    return false;
}

}  // namespace imseg::kern
