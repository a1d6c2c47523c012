#include "toric/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/format.hpp"

namespace toric {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, int line) {
  double x = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last)
    throw Error(ErrorKind::Parse, "bad number '" + tok + "'", line);
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (sep == ' ') {
    std::istringstream is(s);
    for (std::string t; is >> t;) out.push_back(t);
    return out;
  }
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

CurveKind parse_kind(const std::string& s, int line) {
  if (s == "line") return CurveKind::Line;
  if (s == "sqrt_line") return CurveKind::SqrtLine;
  if (s == "arc") return CurveKind::Arc;
  throw Error(ErrorKind::Parse, "unknown segment kind '" + s + "'", line);
}

}  // namespace

std::string write_profile(const MomentProfile& p) {
  std::ostringstream os;
  os << "family: " << p.family() << '\n';
  os << "params:";
  for (double x : p.params()) os << ' ' << fmt17(x);
  os << '\n';
  for (const Point& v : p.vertices()) os << "vertex: " << fmt17(v.w1) << ' ' << fmt17(v.w2) << '\n';
  for (std::size_t s = 0; s < p.segment_count(); ++s) {
    const SegmentTag& t = p.tag(s);
    if (t.kind == CurveKind::Line) continue;
    os << "segment_tag: " << s << ' ' << to_string(t.kind);
    if (t.kind == CurveKind::Arc)
      os << ' ' << fmt17(t.center.w1) << ' ' << fmt17(t.center.w2) << ' ' << fmt17(t.radius);
    os << '\n';
  }
  return os.str();
}

MomentProfile read_profile(const std::string& text) {
  std::string family = "custom";
  std::vector<double> params;
  std::vector<Point> verts;
  std::vector<std::pair<std::size_t, SegmentTag>> tagged;

  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected 'key: value'", line);
    const std::string key = trim(s.substr(0, colon));
    const std::vector<std::string> toks = split(s.substr(colon + 1), ' ');
    if (key == "family") {
      if (toks.size() != 1) throw Error(ErrorKind::Parse, "family takes one word", line);
      family = toks[0];
    } else if (key == "params") {
      for (const auto& t : toks) params.push_back(parse_double(t, line));
    } else if (key == "vertex") {
      if (toks.size() != 2) throw Error(ErrorKind::Parse, "vertex takes two numbers", line);
      verts.push_back({parse_double(toks[0], line), parse_double(toks[1], line)});
    } else if (key == "segment_tag") {
      if (toks.size() < 2) throw Error(ErrorKind::Parse, "segment_tag needs an index and a kind", line);
      const double idx = parse_double(toks[0], line);
      if (idx < 0 || idx != static_cast<double>(static_cast<std::size_t>(idx)))
        throw Error(ErrorKind::Parse, "bad segment index", line);
      SegmentTag t;
      t.kind = parse_kind(toks[1], line);
      if (t.kind == CurveKind::Arc) {
        if (toks.size() != 5) throw Error(ErrorKind::Parse, "arc tag needs center and radius", line);
        t.center = {parse_double(toks[2], line), parse_double(toks[3], line)};
        t.radius = parse_double(toks[4], line);
      } else if (toks.size() != 2) {
        throw Error(ErrorKind::Parse, "unexpected tokens after segment kind", line);
      }
      tagged.emplace_back(static_cast<std::size_t>(idx), t);
    } else {
      throw Error(ErrorKind::Parse, "unknown key '" + key + "'", line);
    }
  }
  if (verts.size() < 2) throw Error(ErrorKind::TooFewVertices, "profile lists fewer than two vertices");
  std::vector<SegmentTag> tags(verts.size() - 1);
  for (const auto& [i, t] : tagged) {
    if (i >= tags.size()) throw Error(ErrorKind::Parse, "segment index out of range", static_cast<int>(i));
    tags[i] = t;
  }
  return MomentProfile::from_vertices(std::move(verts), std::move(tags)).with_family(family, params);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

void save_profile(const MomentProfile& p, const std::string& path) { write_text_file(path, write_profile(p)); }

MomentProfile load_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_profile(ss.str());
}

MomentProfile parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::Parse, "family spec must look like name:p1,p2");
  const std::string name = trim(spec.substr(0, colon));
  std::vector<double> v;
  for (const auto& t : split(spec.substr(colon + 1), ',')) v.push_back(parse_double(t, 0));
  auto count = [&](std::size_t lo, std::size_t hi) {
    if (v.size() < lo || v.size() > hi)
      throw Error(ErrorKind::Parse, "wrong number of parameters for family '" + name + "'");
  };
  auto as_int = [](double x) {
    if (x != static_cast<double>(static_cast<int>(x))) throw Error(ErrorKind::Parse, "sample count must be an integer");
    return static_cast<int>(x);
  };
  if (name == "ellipsoid") {
    count(2, 3);
    return ellipsoid(v[0], v[1], v.size() == 3 ? as_int(v[2]) : 1);
  }
  if (name == "ball") {
    count(1, 2);
    return ball(v[0], v.size() == 2 ? as_int(v[1]) : 1);
  }
  if (name == "polydisk") {
    count(2, 2);
    return polydisk(v[0], v[1]);
  }
  if (name == "fc") {
    count(2, 3);
    return fc_domain(v[0], v[1], v.size() == 3 ? as_int(v[2]) : 32);
  }
  throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

MomentProfile resolve_profile(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return load_profile(arg);
  return parse_family_spec(arg);
}

std::string orbits_csv(const std::vector<OrbitDatum>& orbits) {
  std::ostringstream os;
  os << "m,n,w1,w2,action,location_kind,location_index\n";
  for (const OrbitDatum& o : orbits)
    os << o.mn.m << ',' << o.mn.n << ',' << fmt17(o.base_point.w1) << ',' << fmt17(o.base_point.w2) << ','
       << fmt17(o.action) << ',' << to_string(o.location_kind) << ',' << o.location_index << '\n';
  return os.str();
}

}  // namespace toric
