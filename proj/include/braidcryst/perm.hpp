#ifndef BRAIDCRYST_PERM_HPP
#define BRAIDCRYST_PERM_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace braidcryst {

// Permutation of {1..n}. Products are read left to right: (a*b)(i) = b(a(i)),
// matching the convention used for braid words.
class Perm {
  public:
    explicit Perm(int n);  // identity
    static Perm from_images(std::vector<int> images);
    static Perm transposition(int n, int k);  // (k, k+1)

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
    const std::vector<int> &images() const { return images_; }

    Perm then(const Perm &rhs) const;  // left-to-right product this*rhs
    Perm inverse() const;
    Perm power(long k) const;

    bool is_identity() const;
    long order() const;  // lcm of cycle lengths

    bool operator==(const Perm &) const = default;
    auto operator<=>(const Perm &) const = default;

  private:
    std::vector<int> images_;
};

}  // namespace braidcryst

#endif
