#include "hyperarr/catalan.hpp"

#include "hyperarr/families.hpp"

namespace hyperarr {

unsigned long long catalan_number(int n) {
  if (n < 0) throw InvalidSpec("negative Catalan index");
  return binomial(2 * n, n) / (n + 1);
}

bool is_ballot_sequence(const std::vector<int>& b) {
  int sum = 0;
  for (int v : b) {
    if (v != 1 && v != -1) return false;
    sum += v;
    if (sum < 0) return false;
  }
  return sum == 0;
}

std::vector<std::vector<int>> enumerate_ballot_sequences(int n) {
  if (n < 0) throw InvalidSpec("negative ballot length");
  if (n > 10) throw BudgetExceeded("ballot enumeration supports n <= 10");
  std::vector<std::vector<int>> out;
  std::vector<int> b;
  auto rec = [&](auto&& self, int sum) -> void {
    if (static_cast<int>(b.size()) == 2 * n) {
      if (sum == 0) out.push_back(b);
      return;
    }
    int left = 2 * n - static_cast<int>(b.size());
    if (sum > left) return;  // cannot return to zero
    b.push_back(1);
    self(self, sum + 1);
    b.pop_back();
    if (sum > 0) {
      b.push_back(-1);
      self(self, sum - 1);
      b.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool in_catalan_base_chamber(int n, const SignVector& signs) {
  std::vector<DiffHyperplane> structure = catalan_structure(n);
  if (signs.size() != structure.size())
    throw InvalidSpec("sign vector length does not match Catalan(n)");
  for (size_t k = 0; k < structure.size(); ++k)
    if (structure[k].offset != 1 && signs[k] != 1) return false;
  return true;
}

std::vector<int> catalan_region_to_ballot(int n, const SignVector& signs) {
  if (!in_catalan_base_chamber(n, signs))
    throw NotInBaseChamber("region lies outside x_1 > ... > x_n");
  std::vector<DiffHyperplane> structure = catalan_structure(n);
  // above[i][j] (i < j, 1-based): x_i - x_j > 1, i.e. a_i > b_j.
  std::vector<std::vector<bool>> above(n + 1, std::vector<bool>(n + 1, false));
  for (size_t k = 0; k < structure.size(); ++k)
    if (structure[k].offset == 1)
      above[structure[k].i][structure[k].j] = signs[k] == 1;

  // Merge the descending chains b_1 > b_2 > ... and a_1 > a_2 > ... where
  // a_i = x_i and b_i = x_i + 1; b_j beats a_i iff j <= i or x_i - x_j < 1.
  std::vector<int> out;
  out.reserve(2 * n);
  int ia = 1, ib = 1;
  while (ia <= n || ib <= n) {
    bool emit_b;
    if (ib > n)
      emit_b = false;
    else if (ia > n)
      emit_b = true;
    else
      emit_b = ib <= ia || !above[ia][ib];
    if (emit_b) {
      out.push_back(1);
      ++ib;
    } else {
      out.push_back(-1);
      ++ia;
    }
  }
  return out;
}

bool ballot_bounded_criterion(const std::vector<int>& b) {
  int sum = 0;
  for (size_t k = 0; k + 1 < b.size(); ++k) {
    sum += b[k];
    if (sum <= 0) return false;
  }
  return true;
}

}  // namespace hyperarr
