#include "kreweras/core/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kreweras {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

void sort_terms(std::vector<TextTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const TextTerm& l, const TextTerm& r) { return l.exps < r.exps; });
}


}  // namespace

std::string write_doc(const TextDoc& doc) {
  std::ostringstream out;
  out << doc.kind << '\n';
  for (const auto& c : doc.comments) out << "# " << c << '\n';
  out << "vars";
  for (const auto& v : doc.vars) out << ' ' << v;
  out << '\n';
  if (doc.kind == "series") out << "start " << doc.start << "\norder " << doc.order << '\n';
  std::vector<TextTerm> terms = doc.terms;
  sort_terms(terms);
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    for (std::size_t i = 0; i < t.exps.size(); ++i) out << (i ? " " : "") << t.exps[i];
    out << " : " << t.coeff.to_string() << '\n';
  }
  out << "end\n";
  return out.str();
}

TextDoc parse_doc(std::string_view text) {
  TextDoc doc;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false, ended = false, have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (ended) throw std::invalid_argument("line " + std::to_string(lineno) + ": content after 'end'");
    if (s[0] == '#') {
      doc.comments.push_back(trim(std::string_view(s).substr(1)));
      continue;
    }
    if (!header) {
      if (s != "series" && s != "poly") throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'series' or 'poly'");
      doc.kind = s;
      header = true;
      continue;
    }
    if (s == "end") {
      ended = true;
      continue;
    }
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      auto words = split_ws(s);
      if (words[0] == "vars") {
        doc.vars.assign(words.begin() + 1, words.end());
        have_vars = true;
      } else if (words[0] == "start" && words.size() == 2) {
        doc.start = parse_int(words[1]);
      } else if (words[0] == "order" && words.size() == 2) {
        doc.order = parse_int(words[1]);
      } else {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown header '" + s + "'");
      }
      continue;
    }
    if (!have_vars) throw std::invalid_argument("line " + std::to_string(lineno) + ": term before 'vars'");
    TextTerm term;
    for (const auto& w : split_ws(s.substr(0, colon))) term.exps.push_back(parse_int(w));
    if (term.exps.size() != doc.vars.size())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": exponent vector length mismatch");
    term.coeff = Rat::parse(trim(std::string_view(s).substr(colon + 1)));
    doc.terms.push_back(std::move(term));
  }
  if (!header || !ended) throw std::invalid_argument("truncated document (missing header or 'end')");
  sort_terms(doc.terms);
  return doc;
}

TextDoc to_doc(const TruncSeries<Rat>& f) {
  TextDoc doc;
  doc.vars = {"t"};
  doc.start = f.start();
  doc.order = f.order();
  for (int n = f.start(); n < f.order(); ++n)
    if (!f.coeff(n).is_zero()) doc.terms.push_back({{n}, f.coeff(n)});
  return doc;
}

TextDoc to_doc(const TruncSeries<LPoly>& f) {
  TextDoc doc;
  doc.vars = {"t", "x"};
  doc.start = f.start();
  doc.order = f.order();
  for (int n = f.start(); n < f.order(); ++n) {
    const LPoly c = f.coeff(n);
    if (c.is_zero()) continue;
    for (int e = c.low(); e <= c.high(); ++e)
      if (!c.coeff(e).is_zero()) doc.terms.push_back({{n, e}, c.coeff(e)});
  }
  return doc;
}

TextDoc to_doc(const TruncSeries<MPoly>& f, const std::vector<Var>& coeff_vars) {
  TextDoc doc;
  doc.vars = {"t"};
  for (Var v : coeff_vars) doc.vars.emplace_back(1, var_name(v));
  doc.start = f.start();
  doc.order = f.order();
  for (int n = f.start(); n < f.order(); ++n) {
    const MPoly coeff = f.coeff(n);
    for (const auto& [e, c] : coeff.terms()) {
      TextTerm term{{n}, c};
      for (int i = 0; i < kNumVars; ++i)
        if (e[static_cast<std::size_t>(i)] != 0 &&
            std::find(coeff_vars.begin(), coeff_vars.end(), static_cast<Var>(i)) == coeff_vars.end())
          throw std::invalid_argument(std::string("to_doc: coefficient uses undeclared variable ") + var_name(static_cast<Var>(i)));
      for (Var v : coeff_vars) term.exps.push_back(e[static_cast<std::size_t>(v)]);
      doc.terms.push_back(std::move(term));
    }
  }
  return doc;
}

TextDoc to_doc(const MPoly& p, const std::vector<Var>& vars) {
  TextDoc doc;
  doc.kind = "poly";
  for (Var v : vars) doc.vars.emplace_back(1, var_name(v));
  for (const auto& [e, c] : p.terms()) {
    TextTerm term{{}, c};
    for (int i = 0; i < kNumVars; ++i)
      if (e[static_cast<std::size_t>(i)] != 0 && std::find(vars.begin(), vars.end(), static_cast<Var>(i)) == vars.end())
        throw std::invalid_argument(std::string("to_doc: polynomial uses undeclared variable ") + var_name(static_cast<Var>(i)));
    for (Var v : vars) term.exps.push_back(e[static_cast<std::size_t>(v)]);
    doc.terms.push_back(std::move(term));
  }
  return doc;
}

TruncSeries<Rat> rat_series_from_doc(const TextDoc& doc) {
  if (doc.kind != "series" || doc.vars != std::vector<std::string>{"t"}) throw std::invalid_argument("expected a series in t");
  auto f = TruncSeries<Rat>::zero(doc.order, doc.start);
  for (const auto& term : doc.terms) f.set_coeff(term.exps[0], f.coeff(term.exps[0]) + term.coeff);
  return f;
}

TruncSeries<LPoly> lpoly_series_from_doc(const TextDoc& doc) {
  if (doc.kind != "series" || doc.vars.size() != 2 || doc.vars[0] != "t") throw std::invalid_argument("expected a series in t with one coefficient variable");
  auto f = TruncSeries<LPoly>::zero(doc.order, doc.start);
  for (const auto& term : doc.terms)
    f.set_coeff(term.exps[0], f.coeff(term.exps[0]) + LPoly::monomial(term.coeff, term.exps[1]));
  return f;
}

TruncSeries<MPoly> mpoly_series_from_doc(const TextDoc& doc) {
  if (doc.kind != "series" || doc.vars.empty() || doc.vars[0] != "t") throw std::invalid_argument("expected a series in t");
  std::vector<Var> vars;
  for (std::size_t i = 1; i < doc.vars.size(); ++i) {
    auto v = doc.vars[i].size() == 1 ? var_from_name(doc.vars[i][0]) : std::nullopt;
    if (!v) throw std::invalid_argument("unknown variable " + doc.vars[i]);
    vars.push_back(*v);
  }
  auto f = TruncSeries<MPoly>::zero(doc.order, doc.start);
  for (const auto& term : doc.terms) {
    Exponents e{};
    for (std::size_t i = 0; i < vars.size(); ++i) e[static_cast<std::size_t>(vars[i])] = term.exps[i + 1];
    f.set_coeff(term.exps[0], f.coeff(term.exps[0]) + MPoly::monomial(term.coeff, e));
  }
  return f;
}

MPoly mpoly_from_doc(const TextDoc& doc) {
  if (doc.kind != "poly") throw std::invalid_argument("expected a poly document");
  MPoly p;
  for (const auto& term : doc.terms) {
    Exponents e{};
    for (std::size_t i = 0; i < doc.vars.size(); ++i) {
      auto v = doc.vars[i].size() == 1 ? var_from_name(doc.vars[i][0]) : std::nullopt;
      if (!v) throw std::invalid_argument("unknown variable " + doc.vars[i]);
      e[static_cast<std::size_t>(*v)] = term.exps[i];
    }
    p.add_term(e, term.coeff);
  }
  return p;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace kreweras
