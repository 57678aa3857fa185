#pragma once

#include <array>
#include <optional>
#include <vector>

#include "loopsmith/loop_table.hpp"

namespace loopsmith {

// The three equivalent Moufang identities:
//   M1: x(y(xz)) = ((xy)x)z
//   M2: y(x(zx)) = ((yx)z)x
//   M3: (xy)(zx) = x((yz)x)
// All checks every identity per triple; M3 is the classification default.
enum class MoufangIdent { All = 0, M1 = 1, M2 = 2, M3 = 3 };

struct MoufangScan {
  bool holds = true;
  std::array<int, 3> witness{0, 0, 0};  // (x,y,z) refuting `identity`, when !holds
  int identity = 0;                     // 1..3, which identity the witness refutes
  bool deterministic = true;            // witness is the lexicographically first one
};

struct TheoremWitness {
  std::array<int, 3> triple{0, 0, 0};      // associator(triple) = 1
  std::array<int, 3> refutation{0, 0, 0};  // non-associating, inside <triple>
};

struct TheoremScan {
  bool holds = true;
  std::optional<TheoremWitness> witness;
  bool deterministic = true;
};

enum class MpKind { Moufang, Mp, Fails };
const char* to_string(MpKind kind);

struct MpVerdict {
  MpKind kind = MpKind::Moufang;
  std::optional<TheoremWitness> witness;  // set when kind == Fails
  bool deterministic = true;
};

// Serial reference kernels. Scan order is lexicographic over ordered
// triples, so any witness is the first one.
MoufangScan scan_moufang_serial(const LoopTable& L, MoufangIdent which);
TheoremScan scan_theorem_serial(const LoopTable& L);

/// Exhaustive diagnostics: every ordered triple with trivial associator
/// whose generated subloop is not associative, in lexicographic order.
std::vector<TheoremWitness> scan_theorem_all(const LoopTable& L);

// OpenMP kernels. The ordered-triple space is split into per-row chunks
// processed independently with a cooperative early-exit flag; any witness
// may be reported and deterministic is false when more than one thread
// runs. Built without OpenMP they fall back to the serial kernels.
MoufangScan scan_moufang_parallel(const LoopTable& L, MoufangIdent which, int jobs);
TheoremScan scan_theorem_parallel(const LoopTable& L, int jobs);

// jobs: 0 picks the available parallelism, 1 forces the serial kernel.
int resolve_jobs(int jobs);

/// Exhaustive check of the selected Moufang identity over all ordered
/// triples.
MoufangScan is_moufang(const LoopTable& L, MoufangIdent which = MoufangIdent::M3, int jobs = 1);

/// Scans every ordered triple (a,b,c); whenever the associator is trivial
/// the closure of {a,b,c} must be fully associative. Holds exactly when
/// the loop satisfies the statement of Moufang's theorem.
TheoremScan moufang_theorem_verdict(const LoopTable& L, int jobs = 1);

/// MOUFANG / MP / FAILS classification. MOUFANG inputs also get the
/// theorem verdict computed and asserted as a consistency check.
MpVerdict mp_status(const LoopTable& L, int jobs = 1);

struct PropertyReport {
  bool is_commutative = false;
  bool has_ip = false;
  bool exponent_two = false;
  bool is_steiner = false;  // has_ip && exponent_two
  bool is_moufang = false;
  std::optional<std::array<int, 2>> commutativity_witness;
  std::optional<std::array<int, 2>> ip_witness;
  std::optional<int> exponent_witness;
  std::optional<std::array<int, 3>> moufang_witness;
};

PropertyReport property_report(const LoopTable& L);

}  // namespace loopsmith
