#include "qclust/potential.hpp"

#include <algorithm>

#include "qclust/error.hpp"

namespace qclust {

void add_to(PathCombo& p, const Word& w, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

std::size_t Potential::max_degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void Potential::add(const Word& w, const mpq_class& c) {
  if (w.empty()) throw Error(Errc::InvalidInput, "potential term of length zero");
  if (static_cast<int>(w.size()) > cap_ || c == 0) return;
  const Word key = canonical_rotation(w);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class Potential::coeff(const Word& w) const {
  auto it = terms_.find(canonical_rotation(w));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::string word_to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::string Potential::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.get_str() + "*" + word_to_string(w);
  }
  return s;
}

void check_potential(const Quiver& q, const Potential& w) {
  for (const auto& [word, c] : w.terms()) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      const Arrow& a = q.arrow(word[i]);
      const Arrow& b = q.arrow(word[(i + 1) % word.size()]);
      if (a.tgt != b.src) throw Error(Errc::InvalidInput, "potential word " + word_to_string(word) + " is not a cycle");
    }
  }
}

PathCombo cyclic_derivative(const Potential& w, int arrow) {
  PathCombo out;
  for (const auto& [word, c] : w.terms()) {
    const std::size_t l = word.size();
    for (std::size_t t = 0; t < l; ++t) {
      if (word[t] != arrow) continue;
      Word rest;
      rest.reserve(l - 1);
      for (std::size_t s = 1; s < l; ++s) rest.push_back(word[(t + s) % l]);
      add_to(out, rest, c);
    }
  }
  return out;
}

Potential substitute(const Potential& w, const std::map<int, PathCombo>& subst) {
  Potential out(w.cap());
  const std::size_t cap = static_cast<std::size_t>(w.cap());
  for (const auto& [word, c] : w.terms()) {
    PathCombo acc{{Word{}, c}};
    for (int letter : word) {
      auto it = subst.find(letter);
      PathCombo next;
      for (const auto& [prefix, pc] : acc) {
        if (it == subst.end()) {
          if (prefix.size() + 1 > cap) continue;
          Word nw = prefix;
          nw.push_back(letter);
          add_to(next, nw, pc);
        } else {
          for (const auto& [piece, qc] : it->second) {
            if (prefix.size() + piece.size() > cap) continue;
            Word nw = prefix;
            nw.insert(nw.end(), piece.begin(), piece.end());
            add_to(next, nw, pc * qc);
          }
        }
      }
      acc = std::move(next);
    }
    for (const auto& [nw, nc] : acc) out.add(nw, nc);
  }
  return out;
}

}  // namespace qclust
