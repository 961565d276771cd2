#include "tubefold/chaincode.hpp"

#include <cctype>
#include <map>
#include <set>

namespace tubefold {

BadSymbol::BadSymbol(std::size_t position, char symbol)
    : std::invalid_argument("bad chain code symbol '" + std::string(1, symbol) + "' at position " +
                            std::to_string(position)),
      position_(position),
      symbol_(symbol) {}

ChainCode& ChainCode::operator+=(const ChainCode& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

ChainCode ChainCode::mirror() const {
  std::vector<Turn> out;
  out.reserve(symbols_.size());
  for (Turn t : symbols_) out.push_back(mirrored(t));
  return ChainCode(std::move(out));
}

ChainCode ChainCode::prefix(std::size_t length) const {
  if (length > symbols_.size()) length = symbols_.size();
  return ChainCode(std::vector<Turn>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::string ChainCode::str() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Turn t : symbols_) s.push_back(to_char(t));
  return s;
}

ChainCode parse_code(std::string_view text) {
  ChainCode code;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'L': code.push_back(Turn::L); break;
      case 'R': code.push_back(Turn::R); break;
      case 'S': code.push_back(Turn::S); break;
      default: throw BadSymbol(i, c);
    }
  }
  return code;
}

int qturn(const ChainCode& code) {
  int q = 0;
  for (Turn t : code) q += quarter_turns(t);
  return q;
}

bool prefix_monotone(const ChainCode& code) {
  int q = 0;
  for (Turn t : code) {
    q += quarter_turns(t);
    if (q < -1 || q > 1) return false;
  }
  return true;
}

DualLayout unfolding_dual(const ChainCode& code) {
  DualLayout out;
  out.points.reserve(code.size() + 2);
  Point2 p{0, 0};
  Point2 dir{0, 1};
  out.points.push_back(p);
  auto advance = [&] {
    const Point2 next{p.x + dir.x, p.y + dir.y};
    // Rotating the step by 90 degrees about its midpoint gives the shared edge.
    const Point2 mid2{p.x + next.x, p.y + next.y};
    out.attachments.push_back({{mid2.x - dir.y, mid2.y + dir.x}, {mid2.x + dir.y, mid2.y - dir.x}});
    p = next;
    out.points.push_back(p);
  };
  advance();
  for (Turn t : code) {
    if (t == Turn::L) dir = {-dir.y, dir.x};
    if (t == Turn::R) dir = {dir.y, -dir.x};
    advance();
  }
  return out;
}

bool has_overlap(const ChainCode& code) {
  const auto dual = unfolding_dual(code);
  std::set<Point2> seen;
  for (const Point2& p : dual.points) {
    if (!seen.insert(p).second) return true;
  }
  return false;
}

NetLayout layout_squares(const ChainCode& code, int scale) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  const auto dual = unfolding_dual(code);
  const double s = scale;
  NetLayout net;
  net.dual = dual.points;
  std::map<Point2, std::size_t> first_at;
  for (std::size_t i = 0; i < dual.points.size(); ++i) {
    const Point2& p = dual.points[i];
    auto [it, fresh] = first_at.emplace(p, i);
    net.squares.push_back({s * static_cast<double>(p.x), s * static_cast<double>(p.y), s, !fresh});
    if (!fresh) {
      net.overlap = true;
      net.squares[it->second].overlapping = true;
    }
  }
  for (const auto& a : dual.attachments) {
    net.attachments.push_back({s * static_cast<double>(a.a2.x) / 2, s * static_cast<double>(a.a2.y) / 2,
                               s * static_cast<double>(a.b2.x) / 2, s * static_cast<double>(a.b2.y) / 2});
  }
  return net;
}

}  // namespace tubefold
