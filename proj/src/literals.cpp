#include "hyperspace/literals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace hyperspace {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("literal '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  std::string word() {
    ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '^')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

  double number() { return sum(); }

  /// Text up to the parenthesis closing an already consumed '('.
  std::string enclosed() {
    const std::size_t start = pos_;
    int depth = 1;
    for (; pos_ < s_.size(); ++pos_) {
      if (s_[pos_] == '(' || s_[pos_] == '[' || s_[pos_] == '{') ++depth;
      if (s_[pos_] == ')' || s_[pos_] == ']' || s_[pos_] == '}') --depth;
      if (depth == 0) return s_.substr(start, pos_++ - start);
    }
    fail("unbalanced parentheses");
  }

  std::size_t index() {
    const double v = number();
    if (v < 0 || v != std::floor(v)) fail("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  std::vector<double> tuple() {
    std::vector<double> out;
    expect('(');
    do out.push_back(number());
    while (accept(','));
    expect(')');
    return out;
  }

  Point point(std::size_t dim) {
    if (dim == 1 && peek() != '(') return point1(number());
    const auto v = tuple();
    if (v.size() != dim) fail("point has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim));
    return point_of(v);
  }

  Matrix matrix() {
    std::vector<std::vector<double>> rows;
    expect('[');
    do {
      expect('[');
      rows.emplace_back();
      do rows.back().push_back(number());
      while (accept(','));
      expect(']');
    } while (accept(','));
    expect(']');
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size()) fail("ragged matrix");
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
  }

 private:
  double sum() {
    double v = product();
    for (;;) {
      if (accept('+')) v += product();
      else if (accept('-')) v -= product();
      else return v;
    }
  }
  double product() {
    double v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }
  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    if (accept('(')) {
      const double v = sum();
      expect(')');
      return v;
    }
    if (accept_word("pi")) return std::numbers::pi;
    if (accept_word("inf")) return INFINITY;
    static const std::pair<const char*, double (*)(double)> functions[] = {
        {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
        {"tan", [](double x) { return std::tan(x); }},   {"atan", [](double x) { return std::atan(x); }},
        {"sqrt", [](double x) { return std::sqrt(x); }}, {"exp", [](double x) { return std::exp(x); }},
        {"log", [](double x) { return std::log(x); }}};
    for (const auto& [name, fn] : functions) {
      if (!accept_word(name)) continue;
      expect('(');
      const double v = sum();
      expect(')');
      return fn(v);
    }
    ws();
    const char* begin = s_.c_str() + pos_;
    if (!(std::isdigit(static_cast<unsigned char>(*begin)) || *begin == '.')) fail("expected a number");
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string pt(const Point& p) {
  if (p.size() == 1) return num(p[0]);
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? "," : "") + num(p[i]);
  return s + ")";
}

std::string point_list(const std::vector<Point>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + pt(pts[i]);
  return s + "}";
}

template <class T, class F>
std::string joined(const std::vector<T>& items, F&& f) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? " U " : "") + f(items[i]);
  return s;
}

MapSpec map_of(Parser& p, const SpacePtr& space) {
  if (p.accept_word("identity")) return MapSpec::identity(space);
  if (p.accept_word("affine")) {
    p.expect('(');
    const double a = p.number();
    p.expect(',');
    const double b = p.number();
    p.expect(')');
    return MapSpec::affine(a, b, space);
  }
  if (p.accept_word("linear")) {
    p.expect('(');
    Matrix m = p.matrix();
    p.expect(')');
    return MapSpec::linear(std::move(m), space);
  }
  if (p.accept_word("sinrecip")) {
    if (space && space->kind() == SpaceKind::OpenInterval) return MapSpec::sin_reciprocal(space);
    return MapSpec::sin_reciprocal();
  }
  if (p.accept_word("arctan")) return MapSpec::arctan_of_distance(space);
  if (p.accept_word("pwl")) {
    p.expect('(');
    std::vector<std::pair<double, double>> knots;
    do {
      const auto t = p.tuple();
      if (t.size() != 2) p.fail("pwl knots are (x,y) pairs");
      knots.emplace_back(t[0], t[1]);
    } while (p.accept(','));
    p.expect(')');
    return MapSpec::piecewise_linear(std::move(knots), space);
  }
  if (p.accept_word("compose")) {
    // The rightmost map acts first, so it is parsed on `space` and each
    // map to its left on the codomain of the one after it.
    p.expect('(');
    std::vector<std::string> texts;
    int depth = 0;
    std::string cur;
    for (;;) {
      const char c = p.peek();
      if (c == '\0') p.fail("unterminated compose");
      p.accept(c);
      if (depth == 0 && (c == ';' || c == ')')) {
        texts.push_back(cur);
        cur.clear();
        if (c == ')') break;
        continue;
      }
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      cur += c;
    }
    std::vector<MapSpec> maps;
    SpacePtr dom = space;
    for (auto it = texts.rbegin(); it != texts.rend(); ++it) {
      maps.push_back(parse_map(*it, dom));
      dom = maps.back().codomain();
    }
    std::reverse(maps.begin(), maps.end());
    return MapSpec::compose(std::move(maps));
  }
  p.fail("unknown map");
}

GroupElement group_of(Parser& p, const SpacePtr& space) {
  if (p.accept_word("identity")) return GroupElement::identity(space);
  if (p.accept_word("rotation")) {
    p.expect('(');
    const double t = p.number();
    p.expect(')');
    return GroupElement::rotation(t, space);
  }
  if (p.accept_word("scaling")) {
    p.expect('(');
    const double l = p.number();
    p.expect(')');
    return GroupElement::scaling(l, space);
  }
  if (p.accept_word("translation")) {
    if (space->dimension() == 1) {
      p.expect('(');
      const double t = p.number();
      p.expect(')');
      return GroupElement::translation(point1(t), space);
    }
    return GroupElement::translation(p.point(space->dimension()), space);
  }
  if (p.accept_word("isometry")) {
    p.expect('(');
    Matrix q = p.matrix();
    p.expect(';');
    Point t = p.point(space->dimension());
    p.expect(')');
    return GroupElement::isometry(std::move(q), std::move(t), space);
  }
  if (p.accept_word("compose")) {
    p.expect('(');
    std::vector<GroupElement> parts;
    do parts.push_back(group_of(p, space));
    while (p.accept(';'));
    p.expect(')');
    return GroupElement::compose(std::move(parts));
  }
  p.fail("unknown group element");
}

}  // namespace

double parse_number(const std::string& text) {
  Parser p(text);
  const double v = p.number();
  p.finish();
  return v;
}

Point parse_point(const std::string& text, const SpacePtr& space) {
  Parser p(text);
  Point x = p.point(space->dimension());
  p.finish();
  space->require(x);
  return x;
}

OpenSet parse_open(const std::string& text, const SpacePtr& space) {
  Parser p(text);
  if (p.accept_word("complement")) {
    p.expect('(');
    const std::string inner = p.enclosed();
    p.finish();
    return OpenSet::complement_of(CompactSet::of({parse_set(inner, space)}));
  }
  std::vector<OpenBall> balls;
  do {
    if (!p.accept_word("ball")) p.fail("expected ball(p,r) or complement(K)");
    p.expect('(');
    Point c = p.point(space->dimension());
    p.expect(',');
    const double r = p.number();
    p.expect(')');
    balls.push_back({std::move(c), r});
  } while (p.accept_word("U"));
  p.finish();
  return OpenSet::balls(space, std::move(balls));
}

NeighborhoodSpec parse_neighborhoods(const std::string& text, const SpacePtr& space) {
  Parser p(text);
  NeighborhoodSpec spec;
  do {
    if (p.accept_word("hit")) {
      p.expect('(');
      spec.constraints.push_back(Constraint::hit(parse_open(p.enclosed(), space)));
    } else if (p.accept_word("contain")) {
      p.expect('(');
      spec.constraints.push_back(Constraint::contain(parse_open(p.enclosed(), space)));
    } else if (p.accept_word("miss")) {
      p.expect('(');
      spec.constraints.push_back(Constraint::miss(CompactSet::of({parse_set(p.enclosed(), space)})));
    } else {
      p.fail("expected hit(..), contain(..) or miss(..)");
    }
  } while (p.accept(';'));
  p.finish();
  return spec;
}

std::string instantiate(const std::string& pattern, std::size_t index) {
  auto word_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const bool alone = pattern[i] == 'k' && (i == 0 || !word_char(pattern[i - 1])) &&
                       (i + 1 == pattern.size() || !word_char(pattern[i + 1]));
    out += alone ? "(" + std::to_string(index) + ")" : std::string(1, pattern[i]);
  }
  return out;
}

SpacePtr parse_space(const std::string& text) {
  Parser p(text);
  std::optional<AmbientSpace> sp;
  if (p.accept_word("line")) {
    double x0 = 0.0;
    if (p.accept(':')) {
      if (p.word() != "x") p.fail("expected x0=");
      p.expect('0');
      p.expect('=');
      x0 = p.number();
    }
    sp = AmbientSpace::line(x0);
  } else if (p.accept_word("interval")) {
    const auto ab = p.tuple();
    if (ab.size() != 2) p.fail("interval(a,b) takes two bounds");
    double x0 = 0.5 * (ab[0] + ab[1]);
    if (p.accept(':')) {
      if (p.word() != "x") p.fail("expected x0=");
      p.expect('0');
      p.expect('=');
      x0 = p.number();
    }
    sp = AmbientSpace::open_interval(ab[0], ab[1], x0);
  } else if (p.accept_word("finite")) {
    p.expect('(');
    Matrix m = p.matrix();
    p.expect(')');
    std::size_t base = 0;
    if (p.accept(':')) {
      if (p.word() != "x") p.fail("expected x0=");
      p.expect('0');
      p.expect('=');
      base = p.index();
    }
    sp = AmbientSpace::finite_metric(std::move(m), base);
  } else if (p.word() == "R^") {
    const std::size_t n = p.index();
    if (n == 0) p.fail("dimension must be positive");
    Point x0 = Point::Zero(static_cast<Eigen::Index>(n));
    if (p.accept(':')) {
      if (p.word() != "x") p.fail("expected x0=");
      p.expect('0');
      p.expect('=');
      x0 = p.point(n);
    }
    sp = AmbientSpace::euclidean(n, std::move(x0));
  } else {
    p.fail("unknown space");
  }
  p.finish();
  return share(std::move(*sp));
}

ClosedSet parse_set(const std::string& text, const SpacePtr& space) {
  Parser p(text);
  const std::size_t dim = space->dimension();
  enum class K { none, points, intervals, boxes, balls, ray, segs, cloud } kind = K::none;
  std::vector<Point> pts;
  std::vector<Interval> ivs;
  std::vector<Box> boxes;
  std::vector<Ball> balls;
  std::vector<Segment> segs;
  std::optional<std::pair<Point, Point>> ray;
  double resolution = 0.0;
  // Points and intervals mix in 1-D: points become degenerate intervals.
  auto set_kind = [&](K k) {
    const bool mixed_1d = (kind == K::points && k == K::intervals) || (kind == K::intervals && k == K::points);
    if (mixed_1d && dim == 1) {
      kind = K::intervals;
      return;
    }
    if (kind != K::none && kind != k) p.fail("all pieces of a union must have the same kind");
    kind = k;
  };
  do {
    if (p.accept('{')) {
      set_kind(K::points);
      if (!p.accept('}')) {
        do pts.push_back(p.point(dim));
        while (p.accept(','));
        p.expect('}');
      }
    } else if (p.accept('[')) {
      set_kind(K::intervals);
      const double a = p.number();
      p.expect(',');
      const double b = p.number();
      p.expect(']');
      if (a > b) p.fail("interval bounds out of order");
      ivs.push_back({a, b});
    } else if (p.accept_word("box")) {
      set_kind(K::boxes);
      p.expect('(');
      Point lo = p.point(dim);
      p.expect(',');
      Point hi = p.point(dim);
      p.expect(')');
      boxes.push_back({std::move(lo), std::move(hi)});
    } else if (p.accept_word("ball")) {
      set_kind(K::balls);
      p.expect('(');
      Point c = p.point(dim);
      p.expect(',');
      const double r = p.number();
      p.expect(')');
      balls.push_back({std::move(c), r});
    } else if (p.accept_word("seg")) {
      set_kind(K::segs);
      p.expect('(');
      Point a = p.point(dim);
      p.expect(',');
      Point b = p.point(dim);
      p.expect(')');
      segs.push_back({std::move(a), std::move(b)});
    } else if (p.accept_word("ray")) {
      if (kind != K::none) p.fail("a ray cannot be part of a union");
      kind = K::ray;
      p.expect('(');
      Point a = p.point(dim);
      p.expect(',');
      Point d = p.point(dim);
      p.expect(')');
      ray.emplace(std::move(a), std::move(d));
    } else if (p.accept_word("cloud")) {
      if (kind != K::none) p.fail("a cloud cannot be part of a union");
      kind = K::cloud;
      p.expect('(');
      p.expect('{');
      do pts.push_back(p.point(dim));
      while (p.accept(','));
      p.expect('}');
      p.expect(',');
      resolution = p.number();
      p.expect(')');
    } else {
      p.fail("expected a set piece");
    }
    if (kind == K::ray || kind == K::cloud) break;
  } while (p.accept_word("U"));
  p.finish();
  switch (kind) {
    case K::points: return ClosedSet::points(space, std::move(pts));
    case K::intervals:
      for (const auto& q : pts) ivs.push_back({q[0], q[0]});
      return ClosedSet::intervals(space, std::move(ivs));
    case K::boxes: return ClosedSet::boxes(space, std::move(boxes));
    case K::balls: return ClosedSet::balls(space, std::move(balls));
    case K::segs: return ClosedSet::segments(space, std::move(segs));
    case K::ray: return ClosedSet::ray(space, ray->first, ray->second);
    case K::cloud: return ClosedSet::cloud(space, std::move(pts), resolution);
    case K::none: break;
  }
  p.fail("empty set literal");
}

MapSpec parse_map(const std::string& text, const SpacePtr& space) {
  Parser p(text);
  MapSpec m = map_of(p, space);
  p.finish();
  return m;
}

GroupElement parse_group(const std::string& text, const SpacePtr& space) {
  Parser p(text);
  GroupElement g = group_of(p, space);
  p.finish();
  return g;
}

std::string format_space(const AmbientSpace& sp) {
  const Point& x0 = sp.base_point();
  switch (sp.kind()) {
    case SpaceKind::EuclideanLine: return "line:x0=" + num(x0[0]);
    case SpaceKind::EuclideanN: {
      std::string s = "R^" + std::to_string(sp.dimension()) + ":x0=(";
      for (Eigen::Index i = 0; i < x0.size(); ++i) s += (i ? "," : "") + num(x0[i]);
      return s + ")";
    }
    case SpaceKind::OpenInterval:
      return "interval(" + num(sp.lower()) + "," + num(sp.upper()) + "):x0=" + num(x0[0]);
    case SpaceKind::FiniteMetric: {
      std::string s = "finite([";
      const Matrix& m = sp.matrix();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + num(m(i, j));
        s += "]";
      }
      return s + "]):x0=" + std::to_string(static_cast<std::size_t>(x0[0]));
    }
  }
  return "?";
}

std::string format_set(const ClosedSet& a) {
  if (const auto* fp = a.as<FinitePoints>()) return point_list(fp->points);
  if (const auto* iu = a.as<IntervalUnion>())
    return joined(iu->intervals, [](const Interval& iv) { return "[" + num(iv.lo) + "," + num(iv.hi) + "]"; });
  if (const auto* bu = a.as<BoxUnion>())
    return joined(bu->boxes, [](const Box& b) { return "box(" + pt(b.lo) + "," + pt(b.hi) + ")"; });
  if (const auto* bl = a.as<BallUnion>())
    return joined(bl->balls, [](const Ball& b) { return "ball(" + pt(b.center) + "," + num(b.radius) + ")"; });
  if (const auto* su = a.as<SegmentUnion>())
    return joined(su->segments, [](const Segment& s) { return "seg(" + pt(s.from) + "," + pt(s.to) + ")"; });
  if (const auto* r = a.as<Ray>()) return "ray(" + pt(r->anchor) + "," + pt(r->direction) + ")";
  if (const auto* c = a.as<SampledCloud>()) return "cloud(" + point_list(c->points) + "," + num(c->resolution) + ")";
  return "?";
}

}  // namespace hyperspace
