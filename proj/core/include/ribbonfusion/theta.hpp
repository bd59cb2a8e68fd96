#pragma once

#include "ribbonfusion/fusion.hpp"

namespace ribbonfusion {

/// Labels of the level-l fusion basis after the column relation: partitions
/// contained in the (n-1) x l box, ascending order.
std::vector<Partition> fusion_labels(int n, int l);

/// Highest weight of the dual representation: the rectangle complement
/// lambda*_i = lambda_1 - lambda_{n+1-i}. An involution on the labels.
Partition dual_label(const Partition& lambda, int n, int l);

/// Drops columns of height n: subtracts lambda_n from every part.
Partition strip_full_columns(const Partition& lambda, int n);

/// The element omega = sum over labels of s_lambda * s_{lambda*}, as the
/// list of (label, dual) pairs.
std::vector<std::pair<Partition, Partition>> omega_pairs(int n, int l);

/// Constant term of omega^g in the fusion algebra, computed with classical
/// (q = 1) fusion products and column stripping after every product.
BigInt theta_dim(int n, int l, int g);

/// Same with the cospin q-fusion structure constants; omega^g is multiplied
/// strictly left to right.
LaurentPoly theta_qdim(int n, int l, int g);

}  // namespace ribbonfusion
