#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ribbonfusion/laurent.hpp"
#include "ribbonfusion/partition.hpp"

namespace ribbonfusion {

/// Semistandard filling of a skew shape: rows weakly increasing, columns
/// strictly increasing.
class SemistandardTableau {
public:
    SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int max_entry() const;
    std::vector<int> weight() const;  // multiplicities of 1, 2, ...

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;  // rows_[i] fills row i+1 left to right
};

/// All semistandard tableaux of the shape with entries in 1..max_entry, in a
/// deterministic order (lexicographic by row-reading sequence).
std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

/// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
/// weight mu. mu may be any finite composition; requires |lambda| = |mu|.
BigInt kostka_number(const Partition& lambda, const std::vector<int>& mu);

/// Finite association Partition -> LaurentPoly with descending-lex key order
/// (the order the coefficients are listed in Schur expansions).
class SchurExpansion {
public:
    using Map = std::map<Partition, LaurentPoly, std::greater<Partition>>;

    SchurExpansion() = default;
    SchurExpansion(std::initializer_list<std::pair<Partition, LaurentPoly>> items);

    void add(const Partition& key, const LaurentPoly& value);  // accumulates, drops zeros
    LaurentPoly coeff(const Partition& key) const;
    bool contains(const Partition& key) const { return map_.count(key) > 0; }
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const Map& entries() const { return map_; }

    SchurExpansion scaled(const LaurentPoly& c) const;
    std::map<Partition, BigInt, std::greater<Partition>> eval_one() const;

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) { return a.map_ == b.map_; }

    /// "q^7*s[3,3,2,1] + (q^6+q^7)*s[3,2,2,2]"; "0" when empty.
    std::string str() const;
    /// JSON object { "partition": polynomial object }, keys descending lex.
    std::string json_str() const;

private:
    Map map_;
};

/// Monomial-basis coordinates of a symmetric polynomial: dominant weight ->
/// coefficient of x^weight.
using DominantWeightMap = std::map<Partition, LaurentPoly, std::greater<Partition>>;

/// Inverts the unitriangular Kostka transition s_l = m_l + sum K_{l,m} m_m.
/// n is the variable count the coordinates were computed in; keys of length
/// > n must be absent (they vanish identically in n variables).
SchurExpansion monomial_to_schur(const DominantWeightMap& m, int n);

/// Product of Schur functions in n variables, expanded in the Schur basis by
/// iterated Pieri chains organized along the Jacobi-Trudi determinant.
/// Coefficients are the Littlewood-Richardson multiplicities (q-free).
SchurExpansion schur_product(const std::vector<Partition>& factors, int n);

/// Lascoux-Schutzenberger charge. The reading word takes rows left to right,
/// bottom row first; standard subwords are extracted scanning the word
/// cyclically right to left, and the index increases exactly when the next
/// letter sits to the right of the previous one. Requires partition content.
long long charge_of_word(const std::vector<int>& word);
long long charge(const SemistandardTableau& t);

/// Kostka-Foulkes polynomial: sum of q^charge over SSYT(lambda, mu).
LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

}  // namespace ribbonfusion
