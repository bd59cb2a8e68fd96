#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ribbonfusion/errors.hpp"

namespace ribbonfusion {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// normalized away. Text syntax "6,4,4"; the empty partition is "0" or "".
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates, strips zeros

    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                    // |lambda|
    bool empty() const { return parts_.empty(); }
    int part(int i) const;               // 0-based; 0 beyond the last row
    std::vector<int> padded(int n) const;  // throws if n < length
    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;  // lexicographic; refines dominance per size
    }

private:
    std::vector<int> parts_;
};

std::vector<Partition> parse_partition_tuple(const std::string& text);  // "2,1;2,1"
std::string partition_tuple_str(const std::vector<Partition>& tuple);

/// Skew shape outer/inner with inner contained in outer cellwise.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    int size() const { return outer.size() - inner.size(); }
    /// Cells (row, col), 1-based, row-major order.
    std::vector<std::pair<int, int>> cells() const;
};

/// Strictly decreasing nonnegative beta numbers of a fixed length.
struct BetaSequence {
    explicit BetaSequence(std::vector<long long> betas);
    const std::vector<long long>& values() const { return betas_; }
    int length() const { return static_cast<int>(betas_.size()); }

private:
    std::vector<long long> betas_;
};

/// beta_i = lambda_i + n - i for i = 1..n. Requires n >= length(lambda).
BetaSequence beta_numbers(const Partition& lambda, int n);
Partition partition_from_betas(const BetaSequence& betas);

/// Connected skew diagram cells with no 2x2 square. Rows and columns are
/// 1-based matrix coordinates (row 1 on top). The root is the end of maximal
/// content col - row, i.e. the rightmost lowest cell when the diagram is
/// drawn with the first row at the bottom.
class Ribbon {
public:
    explicit Ribbon(std::vector<std::pair<int, int>> cells);

    int length() const { return static_cast<int>(cells_.size()); }
    int height() const;                     // number of rows occupied
    long long spin2() const { return height() - 1; }  // doubled spin
    std::pair<int, int> root() const;
    long long root_position() const;        // content col - row of the root

    const std::vector<std::pair<int, int>>& cells() const { return cells_; }

private:
    std::vector<std::pair<int, int>> cells_;  // sorted by descending content
};

bool is_r_core(const Partition& lambda, int r);
Partition r_core(const Partition& lambda, int r);

/// r-quotient with the abacus convention: beta numbers are taken with the
/// padding length n = the least multiple of r that is >= length(lambda), and
/// component i collects the beta numbers congruent to i mod r. This is the
/// convention pinned by r_quotient((6,6,6,3,3,3), 3) = ((2,1),(2,1),(2,1)).
std::vector<Partition> r_quotient(const Partition& lambda, int r);

/// Inverse of (r_core, r_quotient); requires core to be an r-core.
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int r);

}  // namespace ribbonfusion
