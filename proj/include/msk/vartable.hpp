#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace msk {

enum class VarKind { kZ, kZBar, kW, kWBar, kU, kParam };

struct Variable {
  std::string name;  // grammar spelling, e.g. "z1", "conj(w2_1)", "u3_2"
  VarKind kind;
  int weight;        // [z]=[z̄]=1, [w_j]=[w̄_j]=[u_j]=j, parameters 0
  int block_weight;  // j for w/w̄/u variables, 1 for z/z̄, 0 for parameters
  int index;         // 1-based position inside its block
};

/// One graded block of the codimension: weight j with k_j coordinates w_j.
struct WeightBlock {
  int weight;
  int count;
  friend bool operator==(const WeightBlock&, const WeightBlock&) = default;
};

/// Variables of the ambient space and of its conjugate/real shadow.
///
/// Layout: z_1..z_n, w blocks by increasing weight, then conj(z),
/// conj(w), u, and finally free real parameters. The first n + κ
/// entries are the holomorphic ambient coordinates, in the order used by
/// every map, field and matrix in the toolkit.
class VarTable {
 public:
  using Ptr = std::shared_ptr<const VarTable>;

  /// Blocks must have distinct weights >= 2 and positive counts; they are
  /// sorted by weight. Parameters are real, weight 0, fixed by conjugation.
  static Ptr make(int n, std::vector<WeightBlock> blocks,
                  std::vector<std::string> params = {});

  int n() const { return n_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  /// κ = Σ k_j.
  int codim() const { return codim_; }
  /// N = n + κ, the number of holomorphic ambient coordinates.
  int ambient_dim() const { return n_ + codim_; }
  int top_weight() const;

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  int weight(std::size_t i) const { return vars_[i].weight; }
  std::size_t conj_of(std::size_t i) const { return conj_[i]; }
  bool is_param(std::size_t i) const { return vars_[i].kind == VarKind::kParam; }

  std::size_t z(int a) const;                  // a = 0..n-1
  std::size_t zbar(int a) const;
  std::size_t w(int block, int b) const;       // block index into blocks(), b = 0..k-1
  std::size_t wbar(int block, int b) const;
  std::size_t u(int block, int b) const;
  /// Holomorphic coordinate by ambient position 0..N-1.
  std::size_t ambient(int pos) const { return static_cast<std::size_t>(pos); }
  /// Ambient position of the first coordinate of a block (z block is -1).
  int block_offset(int block) const;
  int block_of_weight(int weight) const;  // -1 when absent

  std::optional<std::size_t> find(const std::string& name) const;
  const std::vector<std::string>& params() const { return params_; }

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_ && a.params_ == b.params_;
  }

 private:
  int n_ = 0;
  int codim_ = 0;
  std::vector<WeightBlock> blocks_;
  std::vector<std::string> params_;
  std::vector<Variable> vars_;
  std::vector<std::size_t> conj_;
  std::size_t zbar_base_ = 0, wbar_base_ = 0, u_base_ = 0;
};

/// True when both tables describe the same variables.
inline bool same_table(const VarTable::Ptr& a, const VarTable::Ptr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace msk
