#include "astute/io.hpp"

#include "astute/error.hpp"
#include "astute/rules.hpp"
#include "astute/spectral.hpp"

#include "json.hpp"

#include <iomanip>
#include <ostream>

namespace astute {

using nlohmann::json;

std::string to_json(const FactorDocument& doc, int indent) {
  const Factor& f = doc.factor;
  json cycles = json::array();
  for (const auto& c : f.cycles) {
    json cycle = json::array();
    for (const auto& v : c) cycle.push_back({format_word(v.word, f.params.b, f.params.n), v.phase});
    cycles.push_back(std::move(cycle));
  }
  json j = {{"schema", kSchema},
            {"b", f.params.b},
            {"n", f.params.n},
            {"k", f.params.k},
            {"count", f.cycles.size()}};
  if (doc.rule) j["rule"] = *doc.rule;
  j["cycles"] = std::move(cycles);
  if (doc.optimal) j["optimal"] = *doc.optimal;
  if (doc.nodes_explored) j["nodes_explored"] = *doc.nodes_explored;
  return j.dump(indent);
}

FactorDocument factor_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.value("schema", std::string{}) != kSchema)
      throw Error(ErrorKind::ParseError, "expected schema " + std::string(kSchema));
    FactorDocument doc;
    doc.factor.params = {j.at("b").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(),
                         j.at("k").get<std::uint32_t>()};
    const GraphParams& p = doc.factor.params;
    p.validate();
    for (const auto& cycle : j.at("cycles")) {
      Cycle c;
      for (const auto& v : cycle)
        c.push_back({parse_word(v.at(0).get<std::string>(), p.b, p.n), v.at(1).get<std::uint32_t>()});
      doc.factor.cycles.push_back(std::move(c));
    }
    if (j.contains("count") && j["count"].get<std::size_t>() != doc.factor.cycles.size())
      throw Error(ErrorKind::ParseError, "count does not match the number of cycles");
    if (j.contains("rule")) doc.rule = j["rule"].get<std::string>();
    if (j.contains("optimal")) doc.optimal = j["optimal"].get<bool>();
    if (j.contains("nodes_explored")) doc.nodes_explored = j["nodes_explored"].get<std::uint64_t>();
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

void write_text(std::ostream& out, const Factor& f) {
  for (const auto& c : f.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i)
      out << (i ? " -> " : "") << format_vertex(c[i], f.params);
    out << '\n';
  }
}

void write_dot(std::ostream& out, const Factor& f, std::string_view factor_color) {
  const GraphParams& p = f.params;
  const auto next = successor_map(f);
  if (next.empty()) throw Error(ErrorKind::InvalidArgument, "cannot draw an invalid factor");
  out << "digraph astute {\n";
  out << "  label=\"Gamma(" << p.n << "," << p.k << ") b=" << p.b << ", " << f.size()
      << " cycles\";\n";
  out << "  node [shape=circle, fontsize=10];\n";
  const std::uint64_t count = p.vertex_count();
  for (std::uint64_t i = 0; i < count; ++i)
    out << "  v" << i << " [label=\"" << format_vertex(vertex_at(i, p), p) << "\"];\n";
  for (std::uint64_t i = 0; i < count; ++i) {
    for (const auto& w : successors(vertex_at(i, p), p)) {
      const std::uint64_t j = vertex_index(w, p);
      out << "  v" << i << " -> v" << j;
      if (next[i] == j) out << " [color=" << factor_color << ", penwidth=2]";
      else out << " [color=gray80]";
      out << ";\n";
    }
  }
  out << "}\n";
}

void write_spectral_csv(std::ostream& out, const GraphParams& p) {
  const Factor orbits = enumerate_factor(make_pcr(p.b, p.n).affine, p.k);
  out << "vertex,orbit,re,im,distinguished\n";
  out << std::setprecision(12);
  for (std::size_t o = 0; o < orbits.cycles.size(); ++o) {
    const Cycle& c = orbits.cycles[o];
    const Vertex marked = distinguished_vertex(c, p);
    for (const auto& v : c) {
      const auto t = transform(unpack_word(v.word, p.b, p.n));
      // Exact zero imaginary parts print as 0 rather than rounding noise.
      const double im = is_real_exact(unpack_word(v.word, p.b, p.n)) ? 0.0 : t.approx.imag();
      out << format_vertex(v, p) << ',' << o << ',' << t.approx.real() << ',' << im << ','
          << (v == marked ? 1 : 0) << '\n';
    }
  }
}

}  // namespace astute
