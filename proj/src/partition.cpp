#include "ptomo/partition.hpp"

#include <numeric>

namespace ptomo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw domain_error("Partition: parts must be strictly positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw domain_error("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (row(i) < inner.row(i)) return false;
  return true;
}

Partition Partition::add_box(int i) const {
  if (i < 1 || i > length() + 1)
    throw domain_error("Partition::add_box: row out of range");
  if (i > 1 && row(i - 1) <= row(i))
    throw domain_error("Partition::add_box: result not a partition");
  std::vector<int> parts = parts_;
  if (i == length() + 1)
    parts.push_back(1);
  else
    parts[i - 1] += 1;
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += '-';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool Partition::reverse_lex_less(const Partition& o) const {
  if (size_ != o.size_) return size_ < o.size_;
  int rows = std::max(length(), o.length());
  for (int i = 1; i <= rows; ++i) {
    if (row(i) != o.row(i)) return row(i) > o.row(i);
  }
  return false;
}

namespace {

void enumerate(int remaining, int max_part, int max_len, std::vector<int>& stack,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  if (max_len == 0) return;
  for (int next = std::min(remaining, max_part); next >= 1; --next) {
    stack.push_back(next);
    enumerate(remaining - next, next, max_len - 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  if (n < 0 || max_len < 0) throw domain_error("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> stack;
  enumerate(n, n, max_len, stack, out);
  return out;  // descending-first recursion yields reverse-lex order
}

int hook_length(const Partition& lambda, int i, int j) {
  if (!lambda.has_cell(i, j))
    throw domain_error("hook_length: cell outside the diagram");
  int arm = lambda.row(i) - j;
  int leg = 0;
  for (int k = i + 1; k <= lambda.length(); ++k)
    if (lambda.row(k) >= j) ++leg;
  return arm + leg + 1;
}

}  // namespace ptomo
