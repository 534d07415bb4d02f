#include "hyperarr/arrangement.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

Hyperplane Hyperplane::make(std::vector<Rat> normal, Rat offset) {
  int lead = -1;
  for (size_t j = 0; j < normal.size(); ++j)
    if (normal[j] != 0) {
      lead = static_cast<int>(j);
      break;
    }
  if (lead < 0) throw InvalidSpec("hyperplane with zero normal vector");
  Rat s = normal[lead];
  for (Rat& v : normal) v /= s;
  offset /= s;
  return Hyperplane{std::move(normal), std::move(offset)};
}

std::string equation_str(const Hyperplane& h) {
  std::string out;
  for (size_t j = 0; j < h.normal.size(); ++j) {
    const Rat& v = h.normal[j];
    if (v == 0) continue;
    bool neg = rat_sgn(v) < 0;
    Rat mag = neg ? Rat(-v) : v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (mag != 1) out += rat_str(mag);
    out += "x" + std::to_string(j + 1);
  }
  out += "=" + rat_str(h.offset);
  return out;
}

Arrangement Arrangement::make(int d, std::vector<Hyperplane> hs,
                              std::vector<std::string> labels) {
  if (d < 0) throw InvalidSpec("negative dimension");
  for (const Hyperplane& h : hs)
    if (static_cast<int>(h.normal.size()) != d)
      throw InvalidSpec("hyperplane normal length does not match dimension");
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j)
      if (hs[i] == hs[j])
        throw InvalidSpec("duplicate hyperplane: " + equation_str(hs[i]));
  if (labels.empty()) {
    labels.reserve(hs.size());
    for (const Hyperplane& h : hs) labels.push_back(equation_str(h));
  } else if (labels.size() != hs.size()) {
    throw InvalidSpec("label count does not match hyperplane count");
  }
  return Arrangement{d, std::move(hs), std::move(labels)};
}

Arrangement delete_hyperplane(const Arrangement& a, int i) {
  if (i < 0 || i >= a.n()) throw IndexOutOfRange("hyperplane index out of range");
  std::vector<Hyperplane> hs;
  std::vector<std::string> labels;
  for (int k = 0; k < a.n(); ++k) {
    if (k == i) continue;
    hs.push_back(a.hyperplanes[k]);
    labels.push_back(a.labels[k]);
  }
  return Arrangement::make(a.d, std::move(hs), std::move(labels));
}

Contraction contract_with_map(const Arrangement& a, int i) {
  if (i < 0 || i >= a.n()) throw IndexOutOfRange("hyperplane index out of range");
  const Hyperplane& h = a.hyperplanes[i];
  int pivot = 0;
  while (h.normal[pivot] == 0) ++pivot;  // canonical form: entry 1 at the pivot

  Contraction c;
  c.pivot = pivot;
  c.h_normal = h.normal;
  c.h_offset = h.offset;
  for (int j = 0; j < a.d; ++j)
    if (j != pivot) c.coord_map.push_back(j);

  std::vector<Hyperplane> hs;
  std::vector<std::string> labels;
  for (int k = 0; k < a.n(); ++k) {
    if (k == i) continue;
    const Hyperplane& g = a.hyperplanes[k];
    // Substitute x_pivot = h.offset - sum_{j != pivot} h.normal[j] x_j.
    std::vector<Rat> w(c.coord_map.size());
    for (size_t m = 0; m < c.coord_map.size(); ++m) {
      int j = c.coord_map[m];
      w[m] = g.normal[j] - g.normal[pivot] * h.normal[j];
    }
    Rat b = g.offset - g.normal[pivot] * h.offset;
    bool zero = true;
    for (const Rat& v : w)
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero) continue;  // parallel to H: empty trace
    Hyperplane induced = Hyperplane::make(std::move(w), std::move(b));
    bool dup = false;
    for (const Hyperplane& seen : hs)
      if (seen == induced) {
        dup = true;
        break;
      }
    if (dup) continue;
    hs.push_back(std::move(induced));
    labels.push_back(a.labels[k]);
  }
  c.arr = Arrangement::make(a.d - 1, std::move(hs), std::move(labels));
  return c;
}

Arrangement contract(const Arrangement& a, int i) { return contract_with_map(a, i).arr; }

QMatrix lift_contraction_flat(const Contraction& c, const QMatrix& sys, int ambient_d) {
  QMatrix raw(sys.rows + 1, ambient_d + 1);
  for (int j = 0; j < ambient_d; ++j) raw.at(0, j) = c.h_normal[j];
  raw.at(0, ambient_d) = c.h_offset;
  for (int r = 0; r < sys.rows; ++r) {
    for (int m = 0; m + 1 < sys.cols; ++m) raw.at(r + 1, c.coord_map[m]) = sys.at(r, m);
    raw.at(r + 1, ambient_d) = sys.at(r, sys.cols - 1);
  }
  RrefResult rr = rref(raw);
  QMatrix out(rr.rank, ambient_d + 1);
  for (int r = 0; r < rr.rank; ++r)
    for (int j = 0; j <= ambient_d; ++j) out.at(r, j) = rr.m.at(r, j);
  return out;
}

int arrangement_rank(const Arrangement& a) {
  QMatrix m(a.n(), a.d);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.d; ++j) m.at(i, j) = a.hyperplanes[i].normal[j];
  return matrix_rank(std::move(m));
}

std::pair<Arrangement, int> essentialize(const Arrangement& a) {
  QMatrix m(a.n(), a.d);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.d; ++j) m.at(i, j) = a.hyperplanes[i].normal[j];
  RrefResult rr = rref(m);
  int rank = rr.rank;

  std::vector<Hyperplane> hs;
  hs.reserve(a.n());
  for (int i = 0; i < a.n(); ++i) {
    std::vector<Rat> w(rank);
    for (int b = 0; b < rank; ++b) {
      Rat dot;
      for (int j = 0; j < a.d; ++j) dot += a.hyperplanes[i].normal[j] * rr.m.at(b, j);
      w[b] = dot;
    }
    hs.push_back(Hyperplane::make(std::move(w), a.hyperplanes[i].offset));
  }
  return {Arrangement::make(rank, std::move(hs), a.labels), rank};
}

bool is_general_position(const Arrangement& a) {
  int n = a.n(), d = a.d;
  int maxk = std::min(n, d + 1);
  std::vector<int> pick;
  // Enumerate subsets of size 1..maxk.
  auto check = [&](const std::vector<int>& idx) {
    int k = static_cast<int>(idx.size());
    QMatrix coeff(k, d), aug(k, d + 1);
    for (int r = 0; r < k; ++r) {
      for (int j = 0; j < d; ++j) {
        coeff.at(r, j) = a.hyperplanes[idx[r]].normal[j];
        aug.at(r, j) = a.hyperplanes[idx[r]].normal[j];
      }
      aug.at(r, d) = a.hyperplanes[idx[r]].offset;
    }
    int rc = matrix_rank(std::move(coeff));
    int ra = matrix_rank(std::move(aug));
    if (k <= d) return rc == k && ra == rc;  // dimension exactly d-k
    return ra != rc;                         // k == d+1: empty intersection
  };
  bool ok = true;
  auto rec = [&](auto&& self, int start) -> void {
    if (!ok) return;
    int k = static_cast<int>(pick.size());
    if (k >= 1 && k <= maxk && !check(pick)) {
      ok = false;
      return;
    }
    if (k == maxk) return;
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
      if (!ok) return;
    }
  };
  rec(rec, 0);
  return ok;
}

Arrangement read_arrangement(std::istream& in) {
  std::string line;
  int lineno = 0;
  int d = -1;
  std::vector<Hyperplane> hs;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    size_t first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    std::istringstream ss(line);
    if (d < 0) {
      std::string kw;
      ss >> kw;
      if (kw != "dim" || !(ss >> d) || d < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'dim d'");
      std::string extra;
      if (ss >> extra)
        throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after 'dim d'");
      continue;
    }
    std::vector<Rat> coeffs;
    std::string tok;
    bool bar = false, have_offset = false;
    Rat offset;
    while (ss >> tok) {
      if (tok == "|") {
        if (bar) throw ParseError("line " + std::to_string(lineno) + ": repeated '|'");
        bar = true;
        continue;
      }
      Rat v = parse_rat(tok);
      if (bar) {
        offset = v;
        have_offset = true;
        std::string extra;
        if (ss >> extra)
          throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after offset");
        break;
      }
      coeffs.push_back(v);
    }
    if (!bar || !have_offset)
      throw ParseError("line " + std::to_string(lineno) + ": missing '| a'");
    if (static_cast<int>(coeffs.size()) != d)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(d) +
                       " coefficients");
    hs.push_back(Hyperplane::make(std::move(coeffs), std::move(offset)));
  }
  if (d < 0) throw ParseError("missing 'dim d' line");
  try {
    return Arrangement::make(d, std::move(hs));
  } catch (const InvalidSpec& e) {
    throw ParseError(e.what());
  }
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
  out << "dim " << a.d << "\n";
  for (const Hyperplane& h : a.hyperplanes) {
    for (int j = 0; j < a.d; ++j) out << rat_str(h.normal[j]) << " ";
    out << "| " << rat_str(h.offset) << "\n";
  }
}

std::string flat_key(const QMatrix& rref_sys) {
  std::string key = std::to_string(rref_sys.rows) + "x" + std::to_string(rref_sys.cols) + ":";
  for (const Rat& v : rref_sys.a) {
    key += rat_str(v);
    key += ",";
  }
  return key;
}

}  // namespace hyperarr
