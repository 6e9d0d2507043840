#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polyop/subset.hpp"

namespace polyop {

// A set of subsets of [n] (a hypergraph), kept in canonical order.
class Family {
public:
    Family() = default;
    explicit Family(int ambient) : ambient_(ambient) { check_ambient(ambient); }
    // Sorts and deduplicates; throws a domain error if a set leaves [n].
    Family(int ambient, std::vector<Mask> sets);
    static Family of(int ambient, const std::vector<std::vector<int>>& sets);
    static Family power_set(int n);

    int ambient() const { return ambient_; }
    const std::vector<Mask>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    bool contains(Mask m) const;
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }
    std::string to_string() const;

    friend bool operator==(const Family&, const Family&) = default;
    // Ambient, then number of sets, then the canonical set sequence.
    friend std::strong_ordering operator<=>(const Family& a, const Family& b);

private:
    int ambient_ = 0;
    std::vector<Mask> sets_;
};

bool is_downward_closed(const Family& f);
bool is_upward_closed(const Family& f);

// A downward-closed family. The empty family (the void complex) is allowed.
class Complex {
public:
    Complex() = default;
    explicit Complex(int ambient) : faces_(ambient) {}
    // Throws a domain error if f is not downward closed.
    explicit Complex(Family f);
    // Smallest complex containing the given sets.
    static Complex generated_by(int ambient, const std::vector<std::vector<int>>& sets);

    const Family& faces() const { return faces_; }
    operator const Family&() const { return faces_; }
    int ambient() const { return faces_.ambient(); }
    std::size_t size() const { return faces_.size(); }
    bool empty() const { return faces_.empty(); }
    bool is_trivial() const { return faces_.size() == 1; }
    bool contains(Mask m) const { return faces_.contains(m); }
    auto begin() const { return faces_.begin(); }
    auto end() const { return faces_.end(); }
    // Union of all faces: the non-ghost vertices.
    Mask vertices() const;
    std::string to_string() const { return faces_.to_string(); }

    friend bool operator==(const Complex&, const Complex&) = default;
    friend std::strong_ordering operator<=>(const Complex& a, const Complex& b) { return a.faces_ <=> b.faces_; }

private:
    struct Trusted {};
    Complex(Family f, Trusted) : faces_(std::move(f)) {}
    friend Complex trust_complex(Family f);
    Family faces_;
};

// For results that are downward closed by construction.
Complex trust_complex(Family f);

struct RelativePair {
    Complex total;
    Complex sub;

    RelativePair() = default;
    // Throws a domain error on ambient mismatch or if sub is not contained in total.
    RelativePair(Complex total, Complex sub);

    int ambient() const { return total.ambient(); }
    friend bool operator==(const RelativePair&, const RelativePair&) = default;
};

}  // namespace polyop
