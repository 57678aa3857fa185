#pragma once

#include <array>
#include <optional>
#include <vector>

#include "loopsmith/error.hpp"

namespace loopsmith {

/// A finite loop stored as a 1-based Cayley table. Element 1 is the
/// two-sided identity and every row and column is a permutation of 1..k.
/// Instances are immutable after validation and safe to share across
/// threads.
class LoopTable {
 public:
  /// Checks the Latin-square and identity invariants and builds the
  /// division tables. Throws Error on NOT_SQUARE, ENTRY_OUT_OF_RANGE,
  /// COLUMN_NOT_PERMUTATION, ROW_NOT_PERMUTATION or NO_IDENTITY.
  static LoopTable validate(const std::vector<std::vector<int>>& raw);

  int order() const noexcept { return order_; }

  /// a*b with index checking.
  int mul(int a, int b) const;
  /// The unique x with a*x = b.
  int left_divide(int a, int b) const;
  /// The unique x with x*a = b.
  int right_divide(int a, int b) const;

  // Unchecked fast paths for scan kernels.
  int at(int a, int b) const noexcept { return cells_[(a - 1) * (size_t)order_ + (b - 1)]; }
  const int* row(int a) const noexcept { return cells_.data() + (a - 1) * (size_t)order_; }
  int ldiv_at(int a, int b) const noexcept { return ldiv_[(a - 1) * (size_t)order_ + (b - 1)]; }
  int rdiv_at(int a, int b) const noexcept { return rdiv_[(a - 1) * (size_t)order_ + (b - 1)]; }

  bool operator==(const LoopTable& other) const noexcept {
    return order_ == other.order_ && cells_ == other.cells_;
  }

 private:
  LoopTable() = default;

  int order_ = 0;
  std::vector<int> cells_;  // row-major, values 1..k
  std::vector<int> ldiv_;   // ldiv[a][b] = x with a*x = b
  std::vector<int> rdiv_;   // rdiv[a][b] = x with x*a = b
};

LoopTable validate_table(const std::vector<std::vector<int>>& raw);

/// A multiplicatively closed subset of a parent loop together with the
/// generators it was grown from. Closure under division follows from
/// finiteness and is asserted by tests, not constructed.
struct SubloopSet {
  int parent_order = 0;
  std::vector<int> members;  // ascending, always contains 1
  std::vector<int> generators;

  bool contains(int x) const noexcept;
};

struct IpReport {
  bool has_ip = true;
  std::array<int, 2> witness{0, 0};  // refuting pair, valid when !has_ip
};

/// Left and right inverses of every element plus both inverse-property
/// identities, checked over all pairs.
IpReport inverses_profile(const LoopTable& L);

bool is_commutative(const LoopTable& L);
bool exponent_two(const LoopTable& L);
/// IP loop of exponent 2.
bool is_steiner(const LoopTable& L);

std::optional<std::array<int, 2>> commutativity_witness(const LoopTable& L);
std::optional<int> exponent_two_witness(const LoopTable& L);

/// The unique u with (a*(b*c))*u = (a*b)*c. Equals 1 exactly when a,b,c
/// associate in that order.
int associator(const LoopTable& L, int a, int b, int c);

/// Multiplicative closure of gens and the identity.
SubloopSet generate_subloop(const LoopTable& L, const std::vector<int>& gens);

/// Lexicographically smallest (p,q,r) in members with (p*q)*r != p*(q*r),
/// or nullopt when the subset is fully associative. members must be
/// ascending.
std::optional<std::array<int, 3>> associativity_witness(const LoopTable& L,
                                                        const std::vector<int>& members);
std::optional<std::array<int, 3>> associativity_witness(const LoopTable& L, const SubloopSet& S);

// Closure worker used by generate_subloop and the theorem scans. Appends
// the closure of seeds plus the identity into members (ascending). The
// scratch bitmap must have order+1 entries; both buffers are reset here,
// callers just reuse the allocations.
void closure_members(const LoopTable& L, const int* seeds, int nseeds, std::vector<char>& in,
                     std::vector<int>& members);

}  // namespace loopsmith
