#ifndef BRAIDCRYST_BRAID_WORD_HPP
#define BRAIDCRYST_BRAID_WORD_HPP

#include <string>
#include <vector>

#include "braidcryst/perm.hpp"

namespace braidcryst {

// One letter sigma_index^sign, sign in {+1, -1}.
struct BraidLetter {
    int index;
    int sign;
    bool operator==(const BraidLetter &) const = default;
};

// Word in the Artin generators of B_n. Text grammar: whitespace-separated
// tokens, "s3" = sigma_3, "S3" = sigma_3^{-1}.
class BraidWord {
  public:
    explicit BraidWord(int n);
    BraidWord(int n, std::vector<BraidLetter> letters);
    static BraidWord parse(int n, const std::string &text);

    int n() const { return n_; }
    const std::vector<BraidLetter> &letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    BraidWord &append(int index, int sign);
    BraidWord &append(const BraidWord &w);
    BraidWord inverse() const;
    friend BraidWord operator*(BraidWord a, const BraidWord &b) { return a.append(b); }
    BraidWord power(long k) const;

    Perm permutation() const;
    std::string str() const;
    bool operator==(const BraidWord &) const = default;

  private:
    int n_;
    std::vector<BraidLetter> letters_;
};

// Positive lift of a permutation: the word produced by the rightmost-first
// selection sorting network. It is deterministic, has perm(word) = pi, and
// length <= n(n-1)/2.
BraidWord section_word(const Perm &pi);

// sigma_i as a word.
BraidWord sigma_word(int n, int i);

// A_{i,j} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}.
BraidWord pure_generator_word(int n, int i, int j);

// delta_{n_l,p} = sigma_{n_l+p-1} ... sigma_{n_l+(p+1)/2}
//                 sigma_{n_l+(p-1)/2}^{-1} ... sigma_{n_l+1}^{-1},
// p an odd prime power >= 3; projects to a p-cycle on strands n_l+1 .. n_l+p.
BraidWord delta_word(int n, int n_l, int p);

// eta_f = sigma_{a} sigma_{a+1} ... sigma_{b} ascending; the image of
// sigma_1...sigma_{2^r - 1} under the block inclusion starting after strand
// `before` with block size `size`.
BraidWord eta_word(int n, int before, int size);

}  // namespace braidcryst

#endif
