#pragma once

#include <string>
#include <vector>

#include "eta/partition.hpp"

namespace eta {

/*****************************************************************************
 * Signed permutations with an even number of sign changes (type D), stored
 * on a finite window [1..n] and identity beyond it. s_i for i >= 1 swaps the
 * values i and i+1 (and their negatives); s_0 sends 1 -> -2 and 2 -> -1.
 * Left multiplication acts on values.
 *****************************************************************************/

struct SignedPermutation {
  std::vector<int> w;  // w[j-1] = image of j

  int window() const { return static_cast<int>(w.size()); }
};

SignedPermutation make_signed_perm(std::vector<int> w);
SignedPermutation identity_perm(int n);
SignedPermutation trimmed(SignedPermutation w);
SignedPermutation extended(SignedPermutation w, int n);
bool perm_equal(const SignedPermutation& a, const SignedPermutation& b);
bool is_identity(const SignedPermutation& w);

int apply(const SignedPermutation& w, int v);
// signed position: j if w_j = v, -j if w_j = -v
int position_of(const SignedPermutation& w, int v);

int length(const SignedPermutation& w);
SignedPermutation mult(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);
SignedPermutation apply_s_left(int i, const SignedPermutation& w);
bool is_left_descent(int i, const SignedPermutation& w);

bool is_k_grassmannian(const SignedPermutation& w, int k);
TypedPartition perm_to_partition(const SignedPermutation& w, int k);
SignedPermutation partition_to_perm(const TypedPartition& la);

// characteristic sequence of a typed partition (via its Weyl group element)
std::vector<int> beta(const TypedPartition& la, int len);

enum class CoverCase { a, b, c, d1, d2, e, f, g };
std::string cover_case_name(CoverCase c);

struct CoverDatum {
  TypedPartition mu;  // the covered partition: w_mu = s_i w_lambda
  int i = -1;         // simple reflection index
  CoverCase cse = CoverCase::a;
  int p = 0;  // changed row of the shape
  // second affected row: case d1 (row of the value i, may exceed the
  // length of mu) and case g (the adjacent row p+1)
  int q = 0;
};

// all covering relations lambda -> mu with an extensive structural audit
std::vector<CoverDatum> covers(const TypedPartition& la);

TypedPartition top_partition(int k, int n);
// word (a_1..a_r) with w_lambda * w_top = s_{a_1} ... s_{a_r} reduced
std::vector<int> reduced_word_to_top(const TypedPartition& la, int k, int n);

// all elements of the type-D Weyl group with window n (even sign changes)
std::vector<SignedPermutation> all_signed_perms(int n);

SignedPermutation parse_signed_perm(const std::string& text);
std::string format_signed_perm(const SignedPermutation& w);

}  // namespace eta
