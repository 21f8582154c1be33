#include "padfit/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padfit::kernels {

ImageTable make_image_table(std::span<const WordPair> pairs) {
    ImageTable image{};
    for (const auto& [src, dst] : pairs) {
        for (Word rest = src; rest != 0; rest &= rest - 1) {
            image[static_cast<std::size_t>(std::countr_zero(rest))] |= dst;
        }
    }
    return image;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

std::vector<Word> union_product(std::span<const Word> a, std::span<const Word> b) {
    std::vector<Word> out;
    out.reserve(a.size() * b.size());
    for (Word x : a) {
        for (Word y : b) {
            out.push_back(x | y);
        }
    }
    return out;
}

std::vector<Word> map_words(std::span<const Word> src, std::size_t src_width,
                            std::span<const WordPair> pairs) {
    std::vector<Word> dest(src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t b = 0; b < src_width; ++b) {
            if (src[i] & (Word{1} << b)) {
                for (const auto& [from, to] : pairs) {
                    if (from & (Word{1} << b)) {
                        dest[i] |= to;
                    }
                }
            }
        }
    }
    return dest;
}

std::vector<Word> missing(std::span<const Word> sub, std::span<const Word> super) {
    std::vector<Word> out;
    for (Word s : sub) {
        bool found = false;
        for (Word t : super) {
            if (s == t) {
                found = true;
                break;
            }
        }
        if (!found) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Word> uncovered(std::span<const Word> minterms, std::span<const Cube> cubes) {
    std::vector<Word> out;
    for (Word m : minterms) {
        bool hit = false;
        for (const Cube& c : cubes) {
            if (c.covers(m)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace serial

namespace parallel {

namespace {

// Keeps items whose flag is set, preserving order.
std::vector<Word> compact(std::span<const Word> items, const std::vector<std::uint8_t>& keep) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (keep[i]) {
            out.push_back(items[i]);
        }
    }
    return out;
}

} // namespace

std::vector<Word> union_product(std::span<const Word> a, std::span<const Word> b) {
    const auto na = static_cast<std::int64_t>(a.size());
    const std::size_t nb = b.size();
    std::vector<Word> out(a.size() * nb);
#pragma omp parallel for schedule(static) if (a.size() * nb >= kParallelMin)
    for (std::int64_t i = 0; i < na; ++i) {
        const Word x = a[static_cast<std::size_t>(i)];
        Word* row = out.data() + static_cast<std::size_t>(i) * nb;
        for (std::size_t j = 0; j < nb; ++j) {
            row[j] = x | b[j];
        }
    }
    return out;
}

std::vector<Word> map_words(std::span<const Word> src, const ImageTable& image) {
    const auto n = static_cast<std::int64_t>(src.size());
    std::vector<Word> dest(src.size());
#pragma omp parallel for schedule(static) if (src.size() >= kParallelMin)
    for (std::int64_t i = 0; i < n; ++i) {
        dest[static_cast<std::size_t>(i)] = apply_image(image, src[static_cast<std::size_t>(i)]);
    }
    return dest;
}

std::vector<Word> missing(std::span<const Word> sub, std::span<const Word> super) {
    const auto n = static_cast<std::int64_t>(sub.size());
    std::vector<std::uint8_t> keep(sub.size());
#pragma omp parallel for schedule(static) if (sub.size() >= kParallelMin)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        keep[k] = !std::binary_search(super.begin(), super.end(), sub[k]);
    }
    return compact(sub, keep);
}

std::vector<Word> uncovered(std::span<const Word> minterms, std::span<const Cube> cubes) {
    const auto n = static_cast<std::int64_t>(minterms.size());
    std::vector<std::uint8_t> keep(minterms.size());
#pragma omp parallel for schedule(static) if (minterms.size() * (cubes.size() + 1) >= kParallelMin)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const Word m = minterms[k];
        keep[k] = std::none_of(cubes.begin(), cubes.end(), [m](const Cube& c) { return c.covers(m); });
    }
    return compact(minterms, keep);
}

} // namespace parallel

} // namespace padfit::kernels
