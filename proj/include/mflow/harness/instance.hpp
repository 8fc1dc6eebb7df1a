#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mflow/flow_solver.hpp"
#include "mflow/measure.hpp"

namespace mflow::harness {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A problem argument: a single word (name, atom label or number) or a list.
struct Value {
  std::string word;
  std::vector<std::string> list;
  bool is_list = false;
  std::size_t line = 0;
  std::size_t column = 0;

  bool operator==(const Value& o) const { return word == o.word && list == o.list && is_list == o.is_list; }
};

struct Problem {
  std::string op;
  std::vector<std::pair<std::string, Value>> args;
  std::size_t line = 0;
  std::size_t column = 0;

  const Value* find(std::string_view key) const;
  bool operator==(const Problem& o) const { return op == o.op && args == o.args; }
};

enum class DeclKind { Measure1, Potential, Measure2, Cost, Metric, Pairs };
std::string_view decl_keyword(DeclKind k);

struct Declaration {
  DeclKind kind;
  std::string name;
  bool operator==(const Declaration&) const = default;
};

// Parsed instance; all weights are exact.
struct Instance {
  SpacePtr space;
  std::vector<Declaration> order;
  std::map<std::string, Measure1<Rational>> tables1;  // measure1, potential
  std::map<std::string, Measure2<Rational>> tables2;  // measure2, cost, metric
  std::map<std::string, PairSet> pair_sets;
  std::optional<Problem> problem;

  bool operator==(const Instance& o) const;
};

Instance parse_instance(std::string_view text);
// Canonical text: declaration order kept, entries in atom order, zero
// weights omitted, numbers as reduced p/q.
std::string emit_instance(const Instance& inst);

}  // namespace mflow::harness
