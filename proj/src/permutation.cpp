#include "polyop/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "polyop/error.hpp"

namespace polyop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            fail(ErrorKind::domain, "not a permutation of [" + std::to_string(n) + "]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    if (a < 1 || a > n || b < 1 || b > n)
        fail(ErrorKind::domain, "transposition out of range");
    std::swap(v[a - 1], v[b - 1]);
    return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i)
        inv[(*this)(i) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        fail(ErrorKind::domain, "permutation sizes differ");
    std::vector<int> v(a.size());
    for (int i = 1; i <= a.size(); ++i)
        v[i - 1] = a(b(i));
    return Permutation(std::move(v));
}

Mask Permutation::apply(Mask m) const {
    Mask out = 0;
    while (m) {
        int i = std::countr_zero(m) + 1;
        out |= bits::single(images_[i - 1]);
        m &= m - 1;
    }
    return out;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i)
            s += " ";
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

Permutation block_perm(const Permutation& sigma, int k, const Permutation& tau) {
    const int n = sigma.size(), m = tau.size();
    if (k < 1 || k > n)
        fail(ErrorKind::domain, "block position out of range");
    const int sk = sigma(k);
    auto spread = [m](int i, int at) { return i < at ? i : i + m - 1; };
    std::vector<int> v(n + m - 1);
    for (int i = 1; i <= n; ++i)
        if (i != k)
            v[spread(i, k) - 1] = spread(sigma(i), sk);
    for (int j = 1; j <= m; ++j)
        v[k + j - 2] = sk + tau(j) - 1;
    return Permutation(std::move(v));
}

}  // namespace polyop
