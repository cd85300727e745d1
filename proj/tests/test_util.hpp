#ifndef BRAIDCRYST_TEST_UTIL_HPP
#define BRAIDCRYST_TEST_UTIL_HPP

#include <random>

#include "braidcryst/braid_word.hpp"
#include "braidcryst/perm.hpp"

namespace braidcryst::testutil {

inline BraidWord random_word(std::mt19937 &rng, int n, int len) {
    BraidWord w(n);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < len; ++i) w.append(gen(rng), coin(rng) ? 1 : -1);
    return w;
}

inline Perm random_perm(std::mt19937 &rng, int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Perm::from_images(std::move(v));
}

}  // namespace braidcryst::testutil

#endif
