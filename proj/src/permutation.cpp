#include "treetorsor/permutation.hpp"

#include "treetorsor/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace treetorsor {

TreePermutation::TreePermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[v]) fail(ErrorKind::InternalError, "images are not a bijection");
        seen[v] = 1;
    }
}

TreePermutation TreePermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return TreePermutation(std::move(img));
}

bool TreePermutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

TreePermutation TreePermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return TreePermutation(std::move(inv));
}

TreePermutation operator*(const TreePermutation& a, const TreePermutation& b) {
    if (a.size() != b.size()) fail(ErrorKind::InternalError, "permutation sizes differ");
    std::vector<int> img(a.size());
    for (int i = 0; i < a.size(); ++i) img[i] = a.apply(b.apply(i));
    return TreePermutation(std::move(img));
}

TreePermutation TreePermutation::power(long long k) const {
    TreePermutation base = k < 0 ? inverse() : *this;
    long long reps = k < 0 ? -k : k;
    TreePermutation out = identity(size());
    for (long long i = 0; i < reps; ++i) out = base * out;
    return out;
}

std::vector<std::vector<int>> TreePermutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j);
            j = images_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> TreePermutation::cycle_type() const {
    std::vector<int> type;
    int moved = 0;
    for (const auto& c : cycles()) {
        type.push_back(static_cast<int>(c.size()));
        moved += static_cast<int>(c.size());
    }
    for (int i = moved; i < size(); ++i) type.push_back(1);
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string TreePermutation::to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    // separators only needed once indices reach two digits
    const char* sep = size() > 9 ? " " : "";
    std::ostringstream out;
    for (const auto& c : cs) {
        out << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << sep;
            out << c[i] + 1;
        }
        out << ')';
    }
    return out.str();
}

} // namespace treetorsor
