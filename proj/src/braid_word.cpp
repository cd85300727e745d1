#include "braidcryst/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidcryst {

BraidWord::BraidWord(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("strand count must be >= 3 (B_1, B_2 out of scope)");
}

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters) : BraidWord(n) {
    for (const auto &l : letters) {
        if (l.index < 1 || l.index >= n) throw std::out_of_range("generator index out of range");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    }
    letters_ = std::move(letters);
}

BraidWord BraidWord::parse(int n, const std::string &text) {
    BraidWord w(n);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw std::invalid_argument("bad braid letter '" + tok + "' (want s<k> or S<k>)");
        int idx = 0;
        for (size_t p = 1; p < tok.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(tok[p])))
                throw std::invalid_argument("bad braid letter '" + tok + "'");
            idx = idx * 10 + (tok[p] - '0');
            if (idx >= 1 << 20) throw std::invalid_argument("generator index too large");
        }
        if (idx < 1 || idx >= n)
            throw std::out_of_range("generator index " + std::to_string(idx) +
                                    " out of range for n=" + std::to_string(n));
        w.append(idx, tok[0] == 's' ? 1 : -1);
    }
    return w;
}

BraidWord &BraidWord::append(int index, int sign) {
    if (index < 1 || index >= n_) throw std::out_of_range("generator index out of range");
    letters_.push_back({index, sign});
    return *this;
}

BraidWord &BraidWord::append(const BraidWord &w) {
    if (w.n_ != n_) throw std::invalid_argument("strand count mismatch");
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
}

BraidWord BraidWord::inverse() const {
    BraidWord r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.letters_.push_back({it->index, -it->sign});
    return r;
}

BraidWord BraidWord::power(long k) const {
    BraidWord base = k >= 0 ? *this : inverse();
    long reps = k >= 0 ? k : -k;
    BraidWord r(n_);
    for (long i = 0; i < reps; ++i) r.append(base);
    return r;
}

Perm BraidWord::permutation() const {
    Perm p(n_);
    for (const auto &l : letters_) p = p.then(Perm::transposition(n_, l.index));
    return p;
}

std::string BraidWord::str() const {
    std::string s;
    for (const auto &l : letters_) {
        if (!s.empty()) s += ' ';
        s += (l.sign > 0 ? 's' : 'S');
        s += std::to_string(l.index);
    }
    return s;
}

BraidWord section_word(const Perm &pi) {
    const int n = pi.n();
    // strand_at[p-1] = strand currently at position p; sort so that position p
    // finally holds pi^{-1}(p), working from the rightmost position down.
    std::vector<int> strand_at(static_cast<size_t>(n));
    std::iota(strand_at.begin(), strand_at.end(), 1);
    Perm inv = pi.inverse();
    BraidWord w(n);
    for (int p = n; p >= 2; --p) {
        int want = inv(p);
        int m = 1;
        while (strand_at[static_cast<size_t>(m) - 1] != want) ++m;
        for (int k = m; k < p; ++k) {
            w.append(k, 1);
            std::swap(strand_at[static_cast<size_t>(k) - 1], strand_at[static_cast<size_t>(k)]);
        }
    }
    return w;
}

BraidWord sigma_word(int n, int i) {
    BraidWord w(n);
    w.append(i, 1);
    return w;
}

BraidWord pure_generator_word(int n, int i, int j) {
    if (i > j) std::swap(i, j);  // A_{j,i} = A_{i,j}
    if (i < 1 || i >= j || j > n) throw std::out_of_range("bad pure generator indices");
    BraidWord w(n);
    for (int k = j - 1; k > i; --k) w.append(k, 1);
    w.append(i, 1);
    w.append(i, 1);
    for (int k = i + 1; k <= j - 1; ++k) w.append(k, -1);
    return w;
}

BraidWord delta_word(int n, int n_l, int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("delta block size must be odd >= 3");
    if (n_l < 0 || n_l + p > n) throw std::out_of_range("delta block exceeds strand count");
    BraidWord w(n);
    for (int k = n_l + p - 1; k >= n_l + (p + 1) / 2; --k) w.append(k, 1);
    for (int k = n_l + (p - 1) / 2; k >= n_l + 1; --k) w.append(k, -1);
    return w;
}

BraidWord eta_word(int n, int before, int size) {
    if (size < 2) throw std::invalid_argument("eta block size must be >= 2");
    if (before < 0 || before + size > n) throw std::out_of_range("eta block exceeds strand count");
    BraidWord w(n);
    for (int k = before + 1; k <= before + size - 1; ++k) w.append(k, 1);
    return w;
}

}  // namespace braidcryst
