#include "ua/power.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ua {

Element delta(int x, const PowerElement& f) {
  if (x < 0 || std::size_t(x) >= f.size())
    throw std::out_of_range("delta: coordinate " + std::to_string(x) +
                            " outside x_size " + std::to_string(f.size()));
  return f[std::size_t(x)];
}

PowerElement LiftedOperation::operator()(std::span<const PowerElement> args) const {
  if (static_cast<int>(args.size()) != op.arity())
    throw std::invalid_argument("lifted operation arity mismatch");
  for (const auto& f : args)
    if (static_cast<int>(f.size()) != x_size)
      throw std::invalid_argument("lifted operation argument length mismatch");
  PowerElement out(static_cast<std::size_t>(x_size));
  std::vector<Element> at(args.size());
  for (int x = 0; x < x_size; ++x) {
    for (std::size_t i = 0; i < args.size(); ++i) at[i] = args[i][std::size_t(x)];
    out[std::size_t(x)] = eval_positional(op, at);
  }
  return out;
}

LiftedOperation lift(Operation op, int x_size) {
  validate_operation(op);
  if (x_size < 0) throw std::invalid_argument("lift needs x_size >= 0");
  return LiftedOperation{std::move(op), x_size};
}

FiniteAlgebra boolean_clone(int arity_cap) {
  if (arity_cap < 0 || arity_cap > 4)
    throw std::invalid_argument("boolean_clone cap must be between 0 and 4");
  FiniteAlgebra a;
  a.carrier = 2;
  a.ops.push_back({"c0", constant_op(2, 0, 0)});
  a.ops.push_back({"c1", constant_op(2, 0, 1)});
  for (int r = 1; r <= arity_cap; ++r) {
    const int rows = 1 << r;
    std::vector<int> support(r);
    for (int i = 0; i < r; ++i) support[i] = i;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << rows); ++code) {
      Operation op{support, 2, std::vector<Element>(rows)};
      for (int j = 0; j < rows; ++j)
        op.table[j] = static_cast<Element>(code >> (rows - 1 - j) & 1);
      a.ops.push_back({"b" + std::to_string(r) + "_" + std::to_string(code),
                       std::move(op)});
    }
  }
  validate_algebra(a);
  return a;
}

CloneSlice boolean_clone_slice(int arity_cap) {
  CloneSlice s;
  s.algebra = boolean_clone(arity_cap);
  s.carrier = 2;
  s.arity_cap = arity_cap;
  s.per_arity.resize(arity_cap + 1);
  s.generation.resize(arity_cap + 1);
  for (const auto& n : s.algebra.ops) {
    const int r = n.op.arity();
    bool is_projection = false;
    for (int c = 0; c < r && !is_projection; ++c)
      is_projection = (n.op == projection(2, r, c));
    s.per_arity[r].push_back(n.op);
    s.generation[r].push_back(is_projection ? 0 : 1);
  }
  return s;
}

std::size_t power_index(const PowerElement& f, int carrier) {
  std::size_t idx = 0;
  for (Element v : f) {
    if (v < 0 || v >= carrier)
      throw std::invalid_argument("power_index: value outside carrier");
    idx = idx * std::size_t(carrier) + std::size_t(v);
  }
  return idx;
}

PowerElement power_unindex(std::size_t index, int carrier, int x_size) {
  PowerElement f(static_cast<std::size_t>(x_size));
  for (int x = x_size - 1; x >= 0; --x) {
    f[std::size_t(x)] = static_cast<Element>(index % std::size_t(carrier));
    index /= std::size_t(carrier);
  }
  if (index != 0) throw std::invalid_argument("power_unindex: index out of range");
  return f;
}

FiniteAlgebra materialize_power(const FiniteAlgebra& base, int x_size) {
  validate_algebra(base);
  if (x_size < 0) throw std::invalid_argument("materialize_power needs x_size >= 0");
  std::size_t total = 1;
  for (int x = 0; x < x_size; ++x) {
    total *= std::size_t(base.carrier);
    if (total > 4096)
      throw std::runtime_error("materialize_power guard: carrier^x_size exceeds 4096");
  }
  const int n = static_cast<int>(total);

  std::vector<PowerElement> points(total);
  for (std::size_t i = 0; i < total; ++i)
    points[i] = power_unindex(i, base.carrier, x_size);

  FiniteAlgebra out;
  out.carrier = n;
  for (const auto& named : base.ops) {
    const int k = named.op.arity();
    Operation op{named.op.support, n, std::vector<Element>(table_size(n, k))};
    std::vector<std::size_t> pick(std::size_t(k), 0);
    std::vector<Element> at(static_cast<std::size_t>(k));
    PowerElement val(static_cast<std::size_t>(x_size));
    for (std::size_t t = 0; t < op.table.size(); ++t) {
      for (int x = 0; x < x_size; ++x) {
        for (int i = 0; i < k; ++i) at[std::size_t(i)] = points[pick[std::size_t(i)]][std::size_t(x)];
        val[std::size_t(x)] = eval_positional(named.op, at);
      }
      op.table[t] = static_cast<Element>(power_index(val, base.carrier));
      int i = k - 1;
      while (i >= 0 && ++pick[std::size_t(i)] == total) pick[std::size_t(i--)] = 0;
    }
    out.ops.push_back({named.name, std::move(op)});
  }
  validate_algebra(out);
  return out;
}

}  // namespace ua
