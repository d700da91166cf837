#include "hecke/format.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

namespace {

std::string render_intvec(const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string word_string(const GroupContext& g, const std::vector<int>& letters) {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ".";
    s += g.delta_aff()[letters[i]].name;
  }
  return s;
}

}  // namespace

std::string render_lattice(const GroupContext& g, const LamElt& l) {
  (void)g;
  return "(" + render_intvec(l.free) + ";" + render_intvec(l.tors) + ")";
}

std::string render_ext(const GroupContext& g, const ExtElt& w) {
  if (w == g.one()) return "1";
  std::string trans, word;
  if (!w.lam.is_zero()) trans = render_lattice(g, w.lam);
  if (w.w != g.weyl().identity()) {
    auto letters = g.weyl().word(w.w);
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ".";
      s += "s" + std::to_string(letters[i] + 1);
    }
    word = s;
  }
  if (trans.empty()) return word;
  if (word.empty()) return trans;
  return trans + "|" + word;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("BadElementLiteral",
                      why + " at position " + std::to_string(pos) + " in '" + s + "'");
  }
};

IntVec parse_int_list(Cursor& c, char stop1, char stop2) {
  IntVec out;
  c.skip_ws();
  while (!c.eof() && c.peek() != stop1 && c.peek() != stop2) {
    size_t next = 0;
    long long val = 0;
    try {
      val = std::stoll(c.s.substr(c.pos), &next);
    } catch (...) {
      c.fail("expected integer");
    }
    out.push_back(val);
    c.pos += next;
    c.skip_ws();
    if (!c.eof() && c.peek() == ',') {
      ++c.pos;
      c.skip_ws();
    }
  }
  return out;
}

LamElt parse_trans(const GroupContext& g, Cursor& c) {
  if (c.eof() || c.peek() != '(') c.fail("expected '('");
  ++c.pos;
  IntVec free = parse_int_list(c, ';', ')');
  IntVec tors;
  if (!c.eof() && c.peek() == ';') {
    ++c.pos;
    tors = parse_int_list(c, ')', ')');
  }
  if (c.eof() || c.peek() != ')') c.fail("expected ')'");
  ++c.pos;
  if (free.size() != g.lattice().free_rank())
    c.fail("free part needs " + std::to_string(g.lattice().free_rank()) +
           " coordinates");
  tors.resize(g.lattice().torsion_orders().size(), 0);
  return g.lattice().reduce({free, tors});
}

int parse_gen(const GroupContext& g, Cursor& c) {
  size_t start = c.pos;
  while (!c.eof() && (isalnum(c.peek()) || c.peek() == '\'')) ++c.pos;
  std::string name = c.s.substr(start, c.pos - start);
  if (name == "s") name = "s1";
  for (int i = 0; i < g.delta_size(); ++i)
    if (g.delta_aff()[i].name == name) return i;
  c.pos = start;
  c.fail("unknown generator '" + name + "'");
}

ExtElt parse_word(const GroupContext& g, Cursor& c) {
  ExtElt acc = g.one();
  while (true) {
    int gen = parse_gen(g, c);
    acc = g.mul(acc, g.delta_aff()[gen].elt);
    c.skip_ws();
    if (!c.eof() && c.peek() == '.') {
      ++c.pos;
      c.skip_ws();
      continue;
    }
    break;
  }
  return acc;
}

}  // namespace

ExtElt parse_ext(const GroupContext& g, const std::string& text) {
  std::string body = text;
  // optional T[...] wrapper
  if (body.size() >= 3 && (body.rfind("T[", 0) == 0) && body.back() == ']')
    body = body.substr(2, body.size() - 3);
  Cursor c{body};
  c.skip_ws();
  if (c.eof()) c.fail("empty literal");
  if (c.peek() == '1') {
    ++c.pos;
    c.skip_ws();
    if (!c.eof()) c.fail("trailing input after '1'");
    return g.one();
  }
  ExtElt out = g.one();
  bool have = false;
  if (c.peek() == '(') {
    out = g.translation(parse_trans(g, c));
    have = true;
    c.skip_ws();
    if (!c.eof() && c.peek() == '|') {
      ++c.pos;
      c.skip_ws();
      out = g.mul(out, parse_word(g, c));
    }
  } else {
    out = parse_word(g, c);
    have = true;
  }
  c.skip_ws();
  if (!c.eof() || !have) c.fail("trailing input");
  return out;
}

LamElt parse_lattice(const GroupContext& g, const std::string& text) {
  ExtElt e = parse_ext(g, text);
  if (e.w != g.weyl().identity())
    throw DomainError("BadElementLiteral",
                      "expected a translation, got '" + text + "'");
  return e.lam;
}

std::string render_hecke(const Algebra& a, const HeckeElt& h, bool normalized) {
  if (h.is_zero()) return "0";
  const auto& g = a.group();
  struct Row {
    std::string sector;
    int len;
    std::string word;
    std::string lit;
    LaurentInt coeff;
  };
  std::vector<Row> rows;
  for (auto& [w, c] : h.terms) {
    Gallery gal = g.gallery(w);
    Row r;
    r.sector = render_ext(g, gal.omega);
    r.len = g.length(w);
    r.word = word_string(g, gal.word);
    r.lit = render_ext(g, w);
    r.coeff = normalized
                  ? c * LaurentInt::v_power(static_cast<int>(a.weight(w)))
                  : c;
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.sector != y.sector) return x.sector < y.sector;
    if (x.len != y.len) return x.len < y.len;
    if (x.word != y.word) return x.word < y.word;
    return x.lit < y.lit;
  });
  const char* sym = normalized ? "Tn[" : "T[";
  std::ostringstream out;
  bool first = true;
  for (auto& r : rows) {
    std::string term;
    if (r.coeff.is_one()) {
      term = std::string(sym) + r.lit + "]";
    } else if (r.coeff == LaurentInt(-1)) {
      term = "-" + std::string(sym) + r.lit + "]";
    } else if (r.coeff.terms().size() == 1) {
      term = r.coeff.str() + "*" + sym + r.lit + "]";
    } else {
      term = "(" + r.coeff.str() + ")*" + sym + r.lit + "]";
    }
    if (first) {
      out << term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out << " - " << term.substr(1);
    } else {
      out << " + " << term;
    }
  }
  return out.str();
}

std::string render_bernstein(const Algebra& a, const BernsteinForm& b) {
  if (b.empty()) return "0";
  const auto& g = a.group();
  std::ostringstream out;
  bool first = true;
  for (auto& [key, c] : b) {
    std::string term = "Theta[" + render_lattice(g, key.first) + "]";
    if (key.second != g.weyl().identity())
      term += "*T[" + render_ext(g, g.finite(key.second)) + "]";
    std::string cs;
    if (c.is_one()) {
      cs = term;
    } else if (c == LaurentInt(-1)) {
      cs = "-" + term;
    } else if (c.terms().size() == 1) {
      cs = c.str() + "*" + term;
    } else {
      cs = "(" + c.str() + ")*" + term;
    }
    if (first) {
      out << cs;
      first = false;
    } else if (!cs.empty() && cs[0] == '-') {
      out << " - " << cs.substr(1);
    } else {
      out << " + " << cs;
    }
  }
  return out.str();
}

}  // namespace hecke
