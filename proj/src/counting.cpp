#include "thetapath/counting.hpp"

#include <sstream>
#include <stdexcept>

#include "thetapath/path.hpp"
#include "thetapath/tableau.hpp"

namespace thetapath {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result stays integral throughout: after multiplying by n-k+i it holds
  // C(n-k+i, i) * i!, which i divides exactly.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt count_paths_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const BigInt numerator = binomial(2 * n, n) * (4 * n + 4) * (2 * n + 1);
  const BigInt denominator = n + 2;
  if (numerator % denominator != 0) {
    throw std::logic_error("closed form is not an integer");
  }
  return numerator / denominator;
}

BigInt count_tableaux_closed_form(int n) { return count_paths_closed_form(n); }

CountReport cross_check(int n, bool exhaustive, std::size_t cap) {
  CountReport report;
  report.n = n;
  report.closed_form_paths = count_paths_closed_form(n);
  report.closed_form_tableaux = count_tableaux_closed_form(n);
  report.hook_length = hook_length_count(ThetaShape(n).row_lengths());
  if (exhaustive) {
    report.enumerated_paths = BigInt(enumerate_paths(n, cap).size());
    report.enumerated_tableaux = BigInt(enumerate_tableaux(n, cap).size());
  }
  report.consistent = report.closed_form_paths == report.closed_form_tableaux &&
                      report.closed_form_paths == report.hook_length &&
                      (!report.enumerated_paths || *report.enumerated_paths == report.hook_length) &&
                      (!report.enumerated_tableaux ||
                       *report.enumerated_tableaux == report.hook_length);
  return report;
}

std::string to_text(const CountReport& report) {
  std::ostringstream out;
  out << "n                    " << report.n << '\n';
  out << "closed form paths    " << report.closed_form_paths << '\n';
  out << "closed form tableaux " << report.closed_form_tableaux << '\n';
  out << "hook length          " << report.hook_length << '\n';
  if (report.enumerated_paths) out << "enumerated paths     " << *report.enumerated_paths << '\n';
  if (report.enumerated_tableaux) {
    out << "enumerated tableaux  " << *report.enumerated_tableaux << '\n';
  }
  out << "consistent           " << (report.consistent ? "yes" : "no") << '\n';
  return out.str();
}

std::string to_machine(const CountReport& report) {
  std::ostringstream out;
  out << report.n << '\t' << report.closed_form_paths << '\t' << report.closed_form_tableaux
      << '\t' << report.hook_length << '\t';
  if (report.enumerated_paths) {
    out << *report.enumerated_paths;
  } else {
    out << '-';
  }
  out << '\t';
  if (report.enumerated_tableaux) {
    out << *report.enumerated_tableaux;
  } else {
    out << '-';
  }
  out << '\t' << (report.consistent ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace thetapath
