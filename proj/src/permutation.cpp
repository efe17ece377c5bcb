#include "nilcover/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nilcover/errors.hpp"

namespace nilcover {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw ParseError("image sequence is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(degree()) + " and " +
                         std::to_string(rhs.degree()));
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = rhs.images_[images_[i]];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<Point>(i);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree)
      : text_(text), degree_(degree), images_(degree), used_(degree, false) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  Permutation parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty cycle text");
    while (pos_ < text_.size()) {
      parse_cycle();
      skip_space();
    }
    return Permutation(std::move(images_));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed cycle notation '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void parse_cycle() {
    if (text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated cycle");
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == ',') {
        if (cycle.empty()) fail("leading comma");
        ++pos_;
        skip_space();
        if (pos_ < text_.size() && !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected a point after ','");
        }
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
      std::size_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (value > degree_ + 1) value = degree_ + 1;  // saturate; rejected below
        ++pos_;
      }
      if (value == 0 || value > degree_) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." +
                         std::to_string(degree_) + " in '" + std::string(text_) + "'");
      }
      Point p = static_cast<Point>(value - 1);
      if (used_[p]) {
        throw ParseError("point " + std::to_string(value) + " repeated in '" +
                         std::string(text_) + "'");
      }
      used_[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }

  std::string_view text_;
  std::size_t degree_;
  std::vector<Point> images_;
  std::vector<bool> used_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse();
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    out += '(';
    Point x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = p(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> parse_cycle_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  int depth = 0;
  std::size_t begin = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(begin, end - begin);
    auto first = piece.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty element in cycle list");
    out.push_back(parse_cycles(piece, degree));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      if (++depth > 1) throw ParseError("nested parentheses in cycle list");
    } else if (c == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')' in cycle list");
    } else if (c == ',' && depth == 0) {
      flush(i);
      begin = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in cycle list");
  if (text.find_first_not_of(" \t\r\n") != std::string_view::npos) flush(text.size());
  return out;
}

Permutation concatenate(std::span<const Permutation> parts) {
  std::vector<Point> images;
  Point offset = 0;
  for (const auto& part : parts) {
    for (Point x : part.images()) images.push_back(x + offset);
    offset += static_cast<Point>(part.degree());
  }
  return Permutation(std::move(images));
}

}  // namespace nilcover
