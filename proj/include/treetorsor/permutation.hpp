#ifndef TREETORSOR_PERMUTATION_HPP
#define TREETORSOR_PERMUTATION_HPP

#include <string>
#include <vector>

namespace treetorsor {

/// Bijection on canonical tree indices {0..n-1}. Products compose right to
/// left: (a * b)(i) = a(b(i)), and cycle notation prints 1-based, so that
/// (123)(34) multiplies out to (1234).
class TreePermutation {
public:
    TreePermutation() = default;
    explicit TreePermutation(std::vector<int> images);
    static TreePermutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_.at(i); }
    bool is_identity() const;

    TreePermutation inverse() const;
    /// Integer powers, negative allowed.
    TreePermutation power(long long k) const;

    friend TreePermutation operator*(const TreePermutation& a, const TreePermutation& b);
    bool operator==(const TreePermutation&) const = default;

    /// Cycles sorted by smallest element, fixed points omitted.
    std::vector<std::vector<int>> cycles() const;
    /// Descending multiset of cycle lengths including fixed points;
    /// equality means conjugacy in the symmetric group.
    std::vector<int> cycle_type() const;
    /// 1-based cycle notation, "()" for the identity.
    std::string to_string() const;

private:
    std::vector<int> images_;
};

} // namespace treetorsor

#endif
