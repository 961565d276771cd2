#include "tubefold/unfolder.hpp"

#include <array>
#include <string_view>

#include "tubefold/verifier.hpp"

namespace tubefold {

std::string_view to_string(NClass c) {
  switch (c) {
    case NClass::S: return "S";
    case NClass::O: return "O";
    case NClass::L: return "L";
    case NClass::R: return "R";
  }
  return "?";
}

UnfoldContext::UnfoldContext(const Orthotube& tube, Direction terminal, bool prefer_rssl_base)
    : surface_(tube), terminal_(terminal), prefer_rssl_base_(prefer_rssl_base) {}

std::size_t UnfoldContext::box_of(const FaceId& face) const {
  const std::size_t last = n();
  if (face.cell == tube()[last] && face.normal == terminal_) return last + 1;
  return *tube().index_of(face.cell);
}

std::optional<Cell> UnfoldContext::box(std::size_t j) const {
  if (j <= n()) return tube()[j];
  if (j == n() + 1) return tube()[n()].moved(terminal_);
  return std::nullopt;
}

Direction UnfoldContext::hole_normal(std::size_t i) const {
  return i < n() ? tube().axis(i) : terminal_;
}

namespace {

using Kind = UnfoldError::Kind;

std::string mirror(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c == 'L') c = 'R';
    else if (c == 'R') c = 'L';
  }
  return out;
}

int qturn_of(std::string_view s) {
  int q = 0;
  for (char c : s) q += c == 'R' ? 1 : (c == 'L' ? -1 : 0);
  return q;
}

Turn turn_of(char c) { return c == 'L' ? Turn::L : (c == 'R' ? Turn::R : Turn::S); }

ChainCode to_code(std::string_view s) {
  ChainCode code;
  for (char c : s) code.push_back(turn_of(c));
  return code;
}

[[noreturn]] void no_fragment(std::size_t box, std::string_view why) {
  throw UnfoldError(Kind::NoFragment, "no fragment at box " + std::to_string(box) + ": " + std::string(why));
}

struct Plan {
  std::string code;
  std::size_t boxes = 0;
  std::string rule;
};

// The case machine. Every decision reads the geometry through walks from
// the current cursor (continuability) or through box positions.
class Machine {
 public:
  explicit Machine(const UnfoldContext& ctx) : ctx_(ctx) {}

  Cursor run(Cursor c, std::string_view frag) const {
    for (char s : frag) c = step(ctx_.surface(), c, turn_of(s));
    return c;
  }

  bool cont(const Cursor& c, std::string_view frag, std::size_t target) const {
    return ctx_.box_of(run(c, frag).face) == target;
  }

  NClass classify(const Cursor& c, std::size_t i) const {
    const Direction hole = ctx_.hole_normal(i);
    const Direction normal = c.face.normal;
    const Direction d = c.heading;
    if (hole == d) return NClass::S;
    if (hole == negate(normal)) return NClass::O;
    if (hole == left_of(normal, d)) return NClass::L;
    if (hole == right_of(normal, d)) return NClass::R;
    throw UnfoldError(Kind::InvariantViolation,
                      "hole(" + std::to_string(i) + ") faces the start face or lies behind it");
  }

  Plan select(const Cursor& cur, std::size_t i, bool prefer_rssl) const {
    if (i == 0) {
      const std::array<std::string_view, 2> order =
          prefer_rssl ? std::array<std::string_view, 2>{"RSSL", "LSSR"} : std::array<std::string_view, 2>{"LSSR", "RSSL"};
      for (std::string_view f : order) {
        if (cont(cur, f, 1)) return {std::string(f), 1, "base"};
      }
      no_fragment(i, "neither base code enters B_1");
    }
    switch (classify(cur, i)) {
      case NClass::S:
        for (std::string_view f : {"LSSR", "RSSL"}) {
          if (cont(cur, f, i + 1)) return {std::string(f), 1, "straight"};
        }
        no_fragment(i, "straight box not continuable");
      case NClass::L: return side(cur, i, false);
      case NClass::R: return side(cur, i, true);
      case NClass::O: return opposite(cur, i);
    }
    no_fragment(i, "unknown class");
  }

 private:
  // hole(i) to the left (or, mirrored, to the right) of start(i).
  Plan side(const Cursor& cur, std::size_t i, bool mirrored) const {
    auto m = [mirrored](std::string_view f) { return mirrored ? mirror(f) : std::string(f); };
    const std::string name = mirrored ? "right" : "left";
    const std::string flat = m("RLRL");
    if (cont(cur, flat, i + 1)) return {flat, 1, name};
    const std::string turn = m("RSLR");
    if (!cont(cur, turn, i + 1)) no_fragment(i, "neither side fragment enters the next box");
    if (i + 1 == ctx_.n() + 1) return {turn, 1, name + "-end"};
    auto [rest, end] = resume(run(cur, turn), i + 1, mirrored ? -1 : 1);
    return {turn + rest, end - i, name + "-chain"};
  }

  // Continue from start(i) with running qturn q = +-1 until qturn is back
  // at 0 at a fresh box, or the temporary box is entered. Straight boxes
  // keep q; the repeated LRLR step stays in the "hole to the right"
  // configuration until LSRL becomes continuable.
  std::pair<std::string, std::size_t> resume(Cursor cur, std::size_t i, int q) const {
    auto m = [q](std::string_view f) { return q > 0 ? std::string(f) : mirror(f); };
    std::string out;
    while (i <= ctx_.n()) {
      NClass c = classify(cur, i);
      if (q < 0 && c == NClass::L) c = NClass::R;
      else if (q < 0 && c == NClass::R) c = NClass::L;
      switch (c) {
        case NClass::S: {
          const std::string f = m("LSSR");
          if (!cont(cur, f, i + 1)) no_fragment(i, "straight box inside a turn not continuable");
          out += f;
          cur = run(cur, f);
          ++i;
          break;
        }
        case NClass::R: {
          const std::string close = m("LSRL");
          if (cont(cur, close, i + 1)) return {out + close, i + 1};
          const std::string keep = m("LRLR");
          if (!cont(cur, keep, i + 1)) no_fragment(i, "LRLR repetition not continuable");
          out += keep;
          cur = run(cur, keep);
          ++i;
          break;
        }
        case NClass::O: {
          const std::string close = m("LRSL");
          if (cont(cur, close, i + 1)) return {out + close, i + 1};
          no_fragment(i, "opposite box inside a turn not continuable");
        }
        case NClass::L: no_fragment(i, "turn would exceed one quarter");
      }
    }
    return {out, i};
  }

  Plan opposite(const Cursor& cur, std::size_t i) const {
    const std::size_t end = ctx_.n() + 1;
    if (i + 1 == end) return {"RLSR", 1, "opposite-end"};

    const Direction d = cur.heading;
    const Direction l = left_of(cur.face.normal, d);
    const Direction a = negate(cur.face.normal);  // axis B_i -> B_{i+1}

    // B_{i+2} beside B_{i+1}: one of the two base fragments runs into it.
    if (!cont(cur, "LRSL", i + 1)) return sidestep(cur, i, false);
    if (!cont(cur, "RLSR", i + 1)) return sidestep(cur, i, true);

    const auto w = direction_between(*ctx_.box(i + 1), *ctx_.box(i + 2));
    if (w == d) {
      // B_{i+2} turns forward, in the plane of B_{i-1}, B_i, B_{i+1}.
      auto [rest, stop] = resume(run(cur, "RLSR"), i + 1, 1);
      return {"RLSR" + rest, stop - i, "opposite-forward"};
    }
    if (w != a) no_fragment(i, "B_{i+2} in an impossible position");

    // B_i, B_{i+1}, B_{i+2} collinear.
    if (i + 2 == end) return {"RLSRLSSR", 2, "opposite-straight-end"};
    const auto w3 = direction_between(*ctx_.box(i + 2), *ctx_.box(i + 3));
    if (w3 == negate(l)) {
      auto [rest, stop] = resume(run(cur, "RLSRLSSR"), i + 2, 1);
      return {"RLSRLSSR" + rest, stop - i, "opposite-straight-right"};
    }
    if (w3 == l) {
      auto [rest, stop] = resume(run(cur, "LRSLRSSL"), i + 2, -1);
      return {"LRSLRSSL" + rest, stop - i, "opposite-straight-left"};
    }
    if (w3 == negate(d)) {
      for (std::string_view f : {"LRSLRSSLRLSR", "RLSRLSSRLRSL"}) {
        if (cont(cur, f, i + 3)) return {std::string(f), 3, "opposite-straight-back"};
      }
      no_fragment(i, "opposite-straight-back");
    }
    if (w3 == d) {
      for (std::string_view f : {"LSRRLLRLRLSR", "RSLLRRLRLRSL"}) {
        if (cont(cur, f, i + 3)) return {std::string(f), 3, "opposite-straight-forward"};
      }
      no_fragment(i, "opposite-straight-forward");
    }
    return collinear(cur, i, a);
  }

  // B_{i+2} steps sideways off B_{i+1}; `mirrored` when it lies on the left.
  Plan sidestep(const Cursor& cur, std::size_t i, bool mirrored) const {
    auto m = [mirrored](std::string_view f) { return mirrored ? mirror(f) : std::string(f); };
    const std::string name = mirrored ? "opposite-then-left" : "opposite-then-right";
    const std::string pair = m("RLSRLRSL");
    if (cont(cur, pair, i + 2)) return {pair, 2, name};
    const std::string wrap = m("LRSLRLRSRLSS");
    if (cont(cur, wrap, i + 3)) return {wrap, 3, name + "-wrap"};
    no_fragment(i, name);
  }

  // Four or more collinear boxes from B_i. Unfold through B_r with one of
  // the four seeds plus qturn-preserving pairs, where B_r takes the place of
  // B_i in an already handled configuration, then finish that configuration.
  Plan collinear(const Cursor& cur, std::size_t i, Direction a) const {
    std::size_t k = 4;
    while (true) {
      const auto here = ctx_.box(i + k);
      if (!here || direction_between(*ctx_.box(i + k - 1), *here) != a) break;
      ++k;
    }
    if (!ctx_.box(i + k)) {
      // The run reaches the temporary box.
      std::string f = "RLSR";
      std::size_t j = i + 1;
      for (; j <= ctx_.n(); ++j) f += "LSSR";
      return {f, j - i, "opposite-run-end"};
    }
    const std::size_t r = (k % 2 == 0) ? i + k - 2 : i + k - 3;
    static constexpr std::array<std::string_view, 4> kSeeds = {"RLSRLSSRLSSR", "RSLLRRLRLSSR", "LRSLRSSLRSSL",
                                                             "LSRRLLRLRSSL"};
    for (std::string_view seed : kSeeds) {
      const int q = qturn_of(seed);
      std::string frag(seed);
      std::size_t j = i + 3;
      while (j < r + 1) {
        frag += q > 0 ? "LSSRLSSR" : "RSSLRSSL";
        j += 2;
      }
      if (j != r + 1 || !cont(cur, frag, j)) continue;
      try {
        auto [rest, stop] = resume(run(cur, frag), j, q);
        return {frag + rest, stop - i, "opposite-run"};
      } catch (const UnfoldError& e) {
        if (e.kind() != Kind::NoFragment) throw;
      }
    }
    no_fragment(i, "collinear run");
  }

  const UnfoldContext& ctx_;
};

UnfoldOptions normalized(const Orthotube& tube, const UnfoldOptions& options) {
  UnfoldOptions o = options;
  if (!o.terminal) o.terminal = tube.n() == 0 ? Direction::PosX : tube.axis(tube.n() - 1);
  return o;
}

std::vector<Direction> tangents(Direction normal) {
  std::vector<Direction> out;
  for (Direction d : kAllDirections) {
    if (perpendicular(d, normal)) out.push_back(d);
  }
  return out;
}

}  // namespace

UnfoldState initial_state(const Orthotube& tube, const UnfoldOptions& options) {
  const UnfoldOptions o = normalized(tube, options);
  const Direction terminal = *o.terminal;
  if (tube.contains(tube[tube.n()].moved(terminal))) {
    throw std::invalid_argument("temporary box would overlap the tube");
  }
  auto ctx = std::make_shared<const UnfoldContext>(tube, terminal, o.prefer_rssl_base);
  const Direction hole0 = ctx->hole_normal(0);
  const Direction heading = o.initial_heading.value_or(tangents(hole0).front());
  if (!perpendicular(heading, hole0)) throw NotTangent(negate(hole0), heading);

  UnfoldState s;
  s.context = std::move(ctx);
  s.start = {{tube[0], negate(hole0)}, heading};
  s.cursor = first_move(s.surface(), s.start);
  return s;
}

NClass classify_N(const UnfoldState& state, std::size_t i) {
  if (i > state.tube().n()) throw std::out_of_range("classify_N beyond the last box");
  return Machine(*state.context).classify(state.cursor, i);
}

bool continuable(const UnfoldState& state, const ChainCode& fragment, std::size_t target) {
  return Machine(*state.context).cont(state.cursor, fragment.str(), target);
}

Fragment select_fragment(const UnfoldState& state) {
  if (state.done()) throw std::logic_error("select_fragment on a finished state");
  Plan p = Machine(*state.context).select(state.cursor, state.next_box, state.context->prefer_rssl_base());
  return {to_code(p.code), p.boxes, std::move(p.rule)};
}

UnfoldState advance(UnfoldState state, const Fragment& fragment) {
  const UnfoldContext& ctx = *state.context;
  const std::size_t i = state.next_box;
  if (qturn(state.code) != 0) {
    throw UnfoldError(Kind::InvariantViolation, "qturn " + std::to_string(qturn(state.code)) +
                                                    " at checkpoint for box " + std::to_string(i));
  }
  if (ctx.box_of(state.cursor.face) != i) {
    throw UnfoldError(Kind::InvariantViolation, "walk is not inside box " + std::to_string(i));
  }
  if (i > 0 && state.cursor.heading != ctx.tube().axis(i - 1)) {
    throw UnfoldError(Kind::InvariantViolation, "heading into box " + std::to_string(i) + " is not axial");
  }
  state.checkpoints.push_back({i, state.code.size(), fragment.rule});
  for (Turn t : fragment.code) state.cursor = step(ctx.surface(), state.cursor, t);
  state.code += fragment.code;
  state.next_box += fragment.boxes_consumed;
  if (ctx.box_of(state.cursor.face) != state.next_box) {
    throw UnfoldError(Kind::InvariantViolation, "fragment '" + fragment.code.str() + "' did not enter box " +
                                                    std::to_string(state.next_box));
  }
  return state;
}

UnfoldResult unfold_with(const Orthotube& tube, const UnfoldOptions& options) {
  UnfoldState state = initial_state(tube, options);
  while (!state.done()) state = advance(std::move(state), select_fragment(state));
  return {state.code, state.start, std::move(state.checkpoints), state.context->terminal(), 0};
}

UnfoldResult unfold(const Orthotube& tube) {
  const Surface surface(tube);
  const Direction default_terminal = *normalized(tube, {}).terminal;

  std::vector<UnfoldOptions> attempts;
  attempts.push_back({});
  std::vector<Direction> terminals{default_terminal};
  for (Direction d : kAllDirections) {
    if (d != default_terminal && !tube.contains(tube[tube.n()].moved(d))) terminals.push_back(d);
  }
  for (Direction t : terminals) {
    const Direction hole0 = tube.n() == 0 ? t : tube.axis(0);
    const auto hs = tangents(hole0);
    for (Direction h : hs) {
      for (bool rssl : {false, true}) {
        if (t == default_terminal && h == hs.front() && !rssl) continue;  // same as attempt 0
        attempts.push_back({t, h, rssl});
      }
    }
  }

  std::string last_error = "no attempt verified";
  for (std::size_t k = 0; k < attempts.size(); ++k) {
    try {
      UnfoldResult r = unfold_with(tube, attempts[k]);
      const Report report = verify(surface, r.start, r.code);
      if (report.overall && report.passed("PREFIX_QTURN")) {
        r.attempt = k;
        return r;
      }
      last_error = "attempt " + std::to_string(k) + " failed verification";
    } catch (const UnfoldError& e) {
      last_error = e.what();
    }
  }
  throw UnfoldError(Kind::UnfoldFailed, "unfolding failed (" + last_error + ") for tube:\n" +
                                            format_cells(tube.cells()));
}

}  // namespace tubefold
