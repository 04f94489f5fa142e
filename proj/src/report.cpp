#include "qoinv/report.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace qoinv {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : InvalidInput(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                        : what),
      line_(line), column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

} // namespace

InputDocument parse_input(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
    case json::parse_event_t::object_start:
      keys.emplace_back();
      break;
    case json::parse_event_t::object_end:
      keys.pop_back();
      break;
    case json::parse_event_t::key: {
      const auto& key = parsed.get_ref<const std::string&>();
      if (!keys.back().insert(key).second)
        throw ParseError("duplicate key \"" + key + "\"", 0, 0);
      break;
    }
    default:
      break;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 3, column 20: " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos)
      what = what.substr(pos + 2);
    if (what.starts_with("parse error"))
      if (auto pos = what.find(": "); pos != std::string::npos)
        what = what.substr(pos + 2);
    throw ParseError(what, line, column);
  }

  if (!doc.is_object())
    throw ParseError("top level must be an object", 0, 0);
  for (const auto& [key, value] : doc.items()) {
    if (key != "branch" && key != "strict")
      throw ParseError("unknown key \"" + key + "\"", 0, 0);
  }
  if (!doc.contains("branch") || !doc["branch"].is_array())
    throw ParseError("\"branch\" must be an array of [x1, x2] fraction pairs", 0, 0);

  InputDocument out;
  if (doc.contains("strict")) {
    if (!doc["strict"].is_boolean())
      throw ParseError("\"strict\" must be a boolean", 0, 0);
    out.strict = doc["strict"].get<bool>();
  }

  std::size_t j = 0;
  for (const auto& pair : doc["branch"]) {
    ++j;
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError("branch term " + std::to_string(j) + " must be a pair of fraction strings", 0, 0);
    try {
      out.branch.terms.push_back(
          {ExactRational::parse(pair[0].get<std::string>()), ExactRational::parse(pair[1].get<std::string>())});
    } catch (const InvalidInput& e) {
      throw ParseError("branch term " + std::to_string(j) + ": " + e.what(), 0, 0);
    }
  }
  if (out.branch.terms.empty())
    throw InvalidTuple(ValidationCode::Empty, 0, "a branch needs at least one term");
  return out;
}

namespace {

json tuple_json(const CharacteristicTuple& t) {
  json arr = json::array();
  for (const auto& p : t.terms)
    arr.push_back({p.x1.str(), p.x2.str()});
  return arr;
}

} // namespace

std::string render_input(const InputDocument& doc) {
  json j;
  j["branch"] = tuple_json(doc.branch);
  j["strict"] = doc.strict;
  return j.dump() + "\n";
}

std::vector<Check> Analysis::all_checks() const {
  std::vector<Check> out;
  if (comparison)
    out = comparison->checks;
  out.insert(out.end(), checks.begin(), checks.end());
  return out;
}

bool Analysis::all_pass() const {
  for (const auto& c : all_checks())
    if (!c.pass)
      return false;
  return true;
}

namespace {

AxisAnalysis analyze_axis(const CharacteristicTuple& input, Axis axis, std::vector<Check>& checks) {
  AxisAnalysis a;
  a.seq = derivation_sequence(input, axis);
  a.degrees = suffix_degrees(a.seq);
  a.euler = transverse_euler(a.seq);
  a.horizontal = horizontal_zeta(a.seq);
  const auto vertical_levels = vertical_zeta_levels(a.seq);
  a.vertical = vertical_levels.front();
  a.xi = xi_sequence(a.seq);

  const std::string prefix = "axis" + std::to_string(index(axis)) + ".";
  auto record = [&](const std::string& name, std::size_t k, bool pass, std::string witness) {
    checks.push_back({prefix + name, k, pass, std::move(witness)});
  };

  for (std::size_t k = 0; k < a.seq.size(); ++k) {
    const auto& chi = a.euler[k];
    record("chi_integral", k, chi.is_integer(), "chi = " + chi.str());

    const BigInt vdeg = degree_sum(vertical_levels[k]);
    record("vertical_degree_is_chi", k, ExactRational(vdeg) == chi, vdeg.get_str() + " vs " + chi.str());

    const BigInt mult = tm1_multiplicity(vertical_levels[k]);
    const BigInt expected = 1 - a.xi[k];
    record("vertical_multiplicity_is_1_minus_xi", k, mult == expected,
           mult.get_str() + " vs " + expected.get_str());

    const BigInt next = k + 1 < a.xi.size() ? a.xi[k + 1] : BigInt(0);
    record("xi_nonincreasing", k, a.xi[k] >= next && next >= 0,
           a.xi[k].get_str() + " >= " + next.get_str() + " >= 0");
  }
  const BigInt hdeg = degree_sum(a.horizontal);
  record("horizontal_degree_is_chi", 0, ExactRational(hdeg) == a.euler.front(),
         hdeg.get_str() + " vs " + a.euler.front().str());
  return a;
}

} // namespace

Analysis analyze(const CharacteristicTuple& input, AxisChoice axes, bool strict) {
  validate(input, strict);
  Analysis out;
  out.input = input;
  out.strict = strict;
  if (axes != AxisChoice::Two)
    out.axis1 = analyze_axis(input, Axis::One, out.checks);
  if (axes != AxisChoice::One)
    out.axis2 = analyze_axis(input, Axis::Two, out.checks);

  if (out.axis1 && out.axis2) {
    out.comparison = verify_comparison(out.axis1->seq, out.axis2->seq);
    const auto& xi1 = out.axis1->xi;
    const auto& xi2 = out.axis2->xi;
    for (std::size_t k = 0; k < xi1.size() && k < xi2.size(); ++k)
      out.checks.push_back({"equal_xi", k, xi1[k] == xi2[k], xi1[k].get_str() + " vs " + xi2[k].get_str()});
  }

  try {
    if (out.axis1 && out.axis2)
      out.betti = betti_report(out.axis1->seq, out.axis2->seq, out.axis1->vertical, out.axis2->vertical);
    else
      out.betti = betti_report(out.primary().seq, out.primary().vertical);
  } catch (const TheoremViolation& e) {
    out.checks.push_back({"betti_report", 0, false, e.what()});
  }
  if (out.betti) {
    const auto& b = *out.betti;
    out.checks.push_back({"h1_boundary_even", 0, b.h1_boundary % 2 == 0 && b.h1_boundary == 2 * b.xi,
                          "h1 = " + b.h1_boundary.get_str()});
  }
  return out;
}

namespace {

std::string zeta_text(const CycloProduct& p) {
  if (p.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, e] : p.factors()) {
    if (!first)
      os << " ";
    first = false;
    os << "(t^" << a << " - 1)^" << e;
  }
  return os.str();
}

std::string normal_form_text(const CycloProduct& p) {
  const auto nf = cyclotomic_normal_form(p);
  if (nf.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, e] : nf) {
    if (!first)
      os << " ";
    first = false;
    os << "Phi_" << d << "^" << e;
  }
  return os.str();
}

std::vector<const AxisAnalysis*> axes_of(const Analysis& a) {
  std::vector<const AxisAnalysis*> out;
  if (a.axis1)
    out.push_back(&*a.axis1);
  if (a.axis2)
    out.push_back(&*a.axis2);
  return out;
}

void text_checks(std::ostream& os, const std::vector<Check>& checks, bool verbose) {
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass)
      ++failed;
    if (verbose || !c.pass)
      os << (c.pass ? "PASS " : "FAIL ") << c.name << " k=" << c.level << "  " << c.witness << "\n";
  }
  os << checks.size() << " checks, " << failed << " failed\n";
}

void text_zetas(std::ostream& os, const Analysis& a) {
  for (const auto* ax : axes_of(a)) {
    os << "H(" << index(ax->seq.axis) << ") = " << zeta_text(ax->horizontal) << "\n";
  }
  for (const auto* ax : axes_of(a)) {
    os << "V(" << index(ax->seq.axis) << ") = " << zeta_text(ax->vertical) << "\n";
  }
}

} // namespace

std::string render_text(const Analysis& a, Mode mode) {
  std::ostringstream os;
  if (mode == Mode::Zeta) {
    text_zetas(os, a);
    return os.str();
  }
  os << "branch: " << to_string(a.input) << "\n";
  if (mode == Mode::Verify) {
    text_checks(os, a.all_checks(), true);
    return os.str();
  }

  for (const auto* ax : axes_of(a)) {
    const int i = index(ax->seq.axis);
    os << "\n== axis " << i << " ==\n";
    for (std::size_t k = 0; k < ax->seq.size(); ++k) {
      const auto& lv = ax->seq[k];
      const auto& v = lv.inv;
      os << "level " << k << ": " << to_string(lv.branch) << "\n";
      os << "  n1=" << v.n1 << " m1=" << v.m1 << " n2=" << v.n2 << " m2=" << v.m2 << " d_bullet=" << v.d_bullet
         << " b1=" << v.b1 << " b2=" << v.b2 << " c_bullet=" << v.c_bullet << " (r1,s1)=(" << v.r1 << "," << v.s1
         << ") (r2,s2)=(" << v.r2 << "," << v.s2 << ")\n";
      os << "  degree=" << ax->degrees[k] << " chi=" << ax->euler[k] << " xi=" << ax->xi[k] << "\n";
    }
    os << "H(" << i << ") = " << zeta_text(ax->horizontal) << "\n";
    os << "  cyclotomic: " << normal_form_text(ax->horizontal) << "\n";
    os << "V(" << i << ") = " << zeta_text(ax->vertical) << "\n";
    os << "  cyclotomic: " << normal_form_text(ax->vertical) << "\n";
  }

  const auto& p = a.primary();
  os << "\n== degrees ==\n";
  os << "d = " << p.degrees.front() << "\n";
  os << "d^(k):";
  for (const auto& d : p.degrees)
    os << " " << d;
  os << "\nd_bullet^(k):";
  for (const auto& lv : p.seq.levels)
    os << " " << lv.inv.d_bullet;
  os << "\nc_bullet^(k):";
  for (const auto& lv : p.seq.levels)
    os << " " << lv.inv.c_bullet;
  os << "\n";

  if (a.comparison) {
    os << "\n== comparison ==\n";
    for (const auto& pair : a.comparison->pairs)
      os << "U(" << pair.level << ") = " << pair.u << "  M(" << pair.level << ") = " << pair.m << "\n";
  }

  os << "\n== betti ==\n";
  if (a.betti) {
    const auto& b = *a.betti;
    os << "xi^(k):";
    for (const auto& x : b.xi_levels)
      os << " " << x;
    os << "\nxi = " << b.xi << "\n";
    os << "h1(V) = " << b.h1_vertical << "\n";
    os << "h1(boundary) = " << b.h1_boundary << "\n";
    os << "zeta consistency: " << (b.zeta_consistency ? "yes" : "no") << "\n";
  } else {
    os << "unavailable (see failed checks)\n";
  }

  os << "\n== checks ==\n";
  text_checks(os, a.all_checks(), false);
  return os.str();
}

namespace {

json big(const BigInt& v) { return v.get_str(); }

json zeta_json(const CycloProduct& p) {
  json factors = json::array();
  for (const auto& [a, e] : p.factors())
    factors.push_back({big(a), big(e)});
  json nf = json::array();
  for (const auto& [d, e] : cyclotomic_normal_form(p))
    nf.push_back({big(d), big(e)});
  return {{"factors", factors}, {"cyclotomic", nf}};
}

json mat_json(const Mat2& m) { return {{m.a11.str(), m.a12.str()}, {m.a21.str(), m.a22.str()}}; }

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"level", c.level}, {"pass", c.pass}, {"witness", c.witness}});
  return arr;
}

} // namespace

std::string render_structured(const Analysis& a, Mode mode) {
  json out;
  if (mode == Mode::Zeta) {
    for (const auto* ax : axes_of(a)) {
      const std::string i = std::to_string(index(ax->seq.axis));
      out["H" + i] = zeta_json(ax->horizontal);
      out["V" + i] = zeta_json(ax->vertical);
    }
    return out.dump(2) + "\n";
  }

  out["input"] = {{"branch", tuple_json(a.input)}, {"strict", a.strict}};
  const auto checks = a.all_checks();
  out["checks"] = checks_json(checks);
  out["all_pass"] = a.all_pass();
  if (mode == Mode::Verify)
    return out.dump(2) + "\n";

  json axes = json::array();
  for (const auto* ax : axes_of(a)) {
    json levels = json::array();
    for (std::size_t k = 0; k < ax->seq.size(); ++k) {
      const auto& v = ax->seq[k].inv;
      levels.push_back({
          {"k", k},
          {"branch", tuple_json(ax->seq[k].branch)},
          {"invariants",
           {{"n1", big(v.n1)},
            {"m1", big(v.m1)},
            {"n2", big(v.n2)},
            {"m2", big(v.m2)},
            {"d_bullet", big(v.d_bullet)},
            {"b1", big(v.b1)},
            {"b2", big(v.b2)},
            {"c_bullet", big(v.c_bullet)},
            {"r1", big(v.r1)},
            {"s1", big(v.s1)},
            {"r2", big(v.r2)},
            {"s2", big(v.s2)}}},
          {"degree", big(ax->degrees[k])},
          {"euler", ax->euler[k].str()},
          {"xi", big(ax->xi[k])},
      });
    }
    axes.push_back({{"axis", index(ax->seq.axis)},
                    {"levels", levels},
                    {"horizontal_zeta", zeta_json(ax->horizontal)},
                    {"vertical_zeta", zeta_json(ax->vertical)}});
  }
  out["axes"] = axes;

  const auto& p = a.primary();
  json d_bullet = json::array(), c_bullet = json::array(), suffix = json::array();
  for (std::size_t k = 0; k < p.seq.size(); ++k) {
    d_bullet.push_back(big(p.seq[k].inv.d_bullet));
    c_bullet.push_back(big(p.seq[k].inv.c_bullet));
    suffix.push_back(big(p.degrees[k]));
  }
  out["degrees"] = {{"d", big(p.degrees.front())}, {"d_k", suffix}, {"d_bullet", d_bullet}, {"c_bullet", c_bullet}};

  if (a.comparison) {
    json pairs = json::array();
    for (const auto& pair : a.comparison->pairs)
      pairs.push_back({{"k", pair.level}, {"U", mat_json(pair.u)}, {"M", mat_json(pair.m)}});
    out["comparison"] = {{"pairs", pairs}, {"checks", checks_json(a.comparison->checks)}};
  }

  if (a.betti) {
    const auto& b = *a.betti;
    json xi = json::array();
    for (const auto& x : b.xi_levels)
      xi.push_back(big(x));
    out["betti"] = {{"xi_levels", xi},
                    {"xi", big(b.xi)},
                    {"h1_vertical", big(b.h1_vertical)},
                    {"h1_boundary", big(b.h1_boundary)},
                    {"zeta_consistency", b.zeta_consistency}};
  } else {
    out["betti"] = nullptr;
  }
  return out.dump(2) + "\n";
}

RunResult run(const InputDocument& input, const RunOptions& options) {
  RunResult result;
  Analysis analysis;
  try {
    analysis = analyze(input.branch, options.axes, options.strict || input.strict);
  } catch (const InvalidInput& e) {
    result.status = exit_code::invalid_input;
    result.diagnostics = std::string("invalid input: ") + e.what() + "\n";
    return result;
  } catch (const TheoremViolation& e) {
    result.status = exit_code::theorem_violation;
    result.diagnostics = std::string("theorem violation: ") + e.what() + "\n";
    return result;
  }

  result.output =
      options.format == Format::Structured ? render_structured(analysis, options.mode) : render_text(analysis, options.mode);

  if (!analysis.all_pass()) {
    result.status = exit_code::theorem_violation;
    std::ostringstream os;
    os << "theorem violation:\n";
    for (const auto& c : analysis.all_checks())
      if (!c.pass)
        os << "  " << c.name << " k=" << c.level << ": " << c.witness << "\n";
    result.diagnostics = os.str();
  }
  return result;
}

} // namespace qoinv
