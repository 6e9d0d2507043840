#pragma once

#include <string>
#include <vector>

#include "polyop/subset.hpp"

namespace polyop {

// A bijection of [n], stored as 1-based images.
class Permutation {
public:
    Permutation() = default;
    // Throws a domain error unless images is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // All n! permutations in lexicographic order of their image lists.
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Mask apply(Mask m) const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Permutation of [n+m-1] moving the block at k (of width m) to sigma(k),
// permuting its inside by tau, and acting as sigma on the collapsed outer positions.
// Satisfies act(A, sigma) o_{sigma(k)} act(B, tau) = act(A o_k B, block_perm(sigma, k, tau)).
Permutation block_perm(const Permutation& sigma, int k, const Permutation& tau);

}  // namespace polyop
