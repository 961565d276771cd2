#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tubefold {

enum class Turn : std::uint8_t { L, R, S };

constexpr char to_char(Turn t) { return t == Turn::L ? 'L' : (t == Turn::R ? 'R' : 'S'); }
constexpr int quarter_turns(Turn t) { return t == Turn::R ? 1 : (t == Turn::L ? -1 : 0); }
constexpr Turn mirrored(Turn t) { return t == Turn::L ? Turn::R : (t == Turn::R ? Turn::L : Turn::S); }

class BadSymbol : public std::invalid_argument {
 public:
  BadSymbol(std::size_t position, char symbol);
  std::size_t position() const { return position_; }
  char symbol() const { return symbol_; }

 private:
  std::size_t position_;
  char symbol_;
};

/// A word over {L, R, S}.
class ChainCode {
 public:
  ChainCode() = default;
  explicit ChainCode(std::vector<Turn> symbols) : symbols_(std::move(symbols)) {}
  ChainCode(std::initializer_list<Turn> symbols) : symbols_(symbols) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Turn operator[](std::size_t i) const { return symbols_[i]; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }
  const std::vector<Turn>& symbols() const { return symbols_; }

  void push_back(Turn t) { symbols_.push_back(t); }
  ChainCode& operator+=(const ChainCode& other);
  friend ChainCode operator+(ChainCode a, const ChainCode& b) { return a += b; }

  /// L and R swapped.
  ChainCode mirror() const;
  ChainCode prefix(std::size_t length) const;
  std::string str() const;

  friend bool operator==(const ChainCode&, const ChainCode&) = default;
  friend auto operator<=>(const ChainCode&, const ChainCode&) = default;

 private:
  std::vector<Turn> symbols_;
};

/// Case-insensitive, whitespace ignored. BadSymbol carries the index into
/// `text` of the first offending character.
ChainCode parse_code(std::string_view text);

/// Cumulative quarter turning: R = +1, L = -1, S = 0.
int qturn(const ChainCode& code);

/// Every prefix has qturn in {-1, 0, +1}.
bool prefix_monotone(const ChainCode& code);

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Turtle path of a chain code: p_0 = (0,0), p_1 = (0,1), then one unit
/// step per symbol. points.size() == code.size() + 2.
struct DualLayout {
  std::vector<Point2> points;

  /// Shared edge between squares i and i+1, given in doubled coordinates
  /// (the endpoints sit on half-integers).
  struct Attachment {
    Point2 a2;
    Point2 b2;
  };
  std::vector<Attachment> attachments;
};

DualLayout unfolding_dual(const ChainCode& code);

/// True iff the dual path revisits a point.
bool has_overlap(const ChainCode& code);

/// Net geometry in drawing units (y up).
struct NetLayout {
  struct Square {
    double cx = 0;
    double cy = 0;
    double side = 0;
    bool overlapping = false;
  };
  struct Segment {
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  };
  std::vector<Square> squares;
  std::vector<Segment> attachments;
  std::vector<Point2> dual;
  bool overlap = false;
};

/// Squares of side `scale` centered at scale * p_i, in path order.
NetLayout layout_squares(const ChainCode& code, int scale);

}  // namespace tubefold
