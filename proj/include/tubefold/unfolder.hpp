#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubefold/chaincode.hpp"
#include "tubefold/lattice.hpp"
#include "tubefold/surface.hpp"

namespace tubefold {

/// Position of hole(i) as seen from start(i) with axial heading d:
/// straight ahead, opposite the start face, to the left or to the right.
enum class NClass { S, O, L, R };

std::string_view to_string(NClass c);

struct UnfoldOptions {
  /// Where the temporary box B_{n+1} goes; default is straight ahead of
  /// the entry into B_n (+X for a single box).
  std::optional<Direction> terminal;
  /// Initial heading on the start face; default is the first tangent in
  /// direction order.
  std::optional<Direction> initial_heading;
  /// Try RSSL before LSSR for the first box.
  bool prefer_rssl_base = false;
};

/// Start of a fragment: the walk has just entered `box` (qturn 0) after
/// `offset` symbols. `rule` names the configuration that chose the fragment.
struct Checkpoint {
  std::size_t box = 0;
  std::size_t offset = 0;
  std::string rule;
};

/// Tube, surface and terminal placement shared by every state of one run.
class UnfoldContext {
 public:
  UnfoldContext(const Orthotube& tube, Direction terminal, bool prefer_rssl_base = false);

  const Orthotube& tube() const { return surface_.tube(); }
  const Surface& surface() const { return surface_; }
  std::size_t n() const { return tube().n(); }
  Direction terminal() const { return terminal_; }
  bool prefer_rssl_base() const { return prefer_rssl_base_; }

  /// Box index of a surface face; the face of B_n towards the temporary box
  /// counts as part of box n + 1.
  std::size_t box_of(const FaceId& face) const;
  /// Cell of box j for j <= n + 1 (n + 1 being the temporary box).
  std::optional<Cell> box(std::size_t j) const;
  /// Outward normal of hole(i) on B_i, for i <= n.
  Direction hole_normal(std::size_t i) const;

 private:
  Surface surface_;
  Direction terminal_;
  bool prefer_rssl_base_;
};

struct UnfoldState {
  std::shared_ptr<const UnfoldContext> context;
  /// f_0 and the initial heading.
  Cursor start;
  /// The face the walk currently occupies.
  Cursor cursor;
  ChainCode code;
  /// First box not yet unfolded; n + 1 once done.
  std::size_t next_box = 0;
  std::vector<Checkpoint> checkpoints;

  const Orthotube& tube() const { return context->tube(); }
  const Surface& surface() const { return context->surface(); }
  bool done() const { return next_box > tube().n(); }
};

class UnfoldError : public std::runtime_error {
 public:
  enum class Kind { NoFragment, InvariantViolation, UnfoldFailed };
  UnfoldError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Start cursor on the face of B_0 opposite hole(0); the walk has made its
/// unlabelled first move.
UnfoldState initial_state(const Orthotube& tube, const UnfoldOptions& options = {});

/// N(i) for the walk's current face taken as start(i).
NClass classify_N(const UnfoldState& state, std::size_t i);

/// Whether appending `fragment` leaves the walk on a face of box `target`.
bool continuable(const UnfoldState& state, const ChainCode& fragment, std::size_t target);

struct Fragment {
  ChainCode code;
  std::size_t boxes_consumed = 0;
  std::string rule;
};

/// Chain code for the box(es) starting at state.next_box, restoring qturn
/// to 0 at the next checkpoint (or ending in the temporary box).
Fragment select_fragment(const UnfoldState& state);

/// Appends a fragment and records the checkpoint it started from.
UnfoldState advance(UnfoldState state, const Fragment& fragment);

struct UnfoldResult {
  ChainCode code;
  Cursor start;
  std::vector<Checkpoint> checkpoints;
  Direction terminal = Direction::PosX;
  /// 0 when the default choices worked; otherwise the index of the
  /// fallback combination that produced the result.
  std::size_t attempt = 0;
};

/// Runs the case machine with the given choices; no fallback. Throws
/// UnfoldError when the machine gets stuck or violates an invariant. The
/// result is not verified.
UnfoldResult unfold_with(const Orthotube& tube, const UnfoldOptions& options);

/// Verified dual-Hamiltonian unfolding of length 4n + 4. Falls back over
/// base code, initial heading and terminal placement if the default run
/// does not verify; throws UnfoldError(UnfoldFailed) if nothing does.
UnfoldResult unfold(const Orthotube& tube);

}  // namespace tubefold
