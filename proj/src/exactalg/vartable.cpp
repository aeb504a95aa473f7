#include "msk/vartable.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace msk {

namespace {

std::string w_name(int weight, int index) {
  return "w" + std::to_string(weight) + "_" + std::to_string(index);
}

}  // namespace

VarTable::Ptr VarTable::make(int n, std::vector<WeightBlock> blocks,
                             std::vector<std::string> params) {
  if (n < 1) throw std::invalid_argument("CR dimension n must be positive");
  std::sort(blocks.begin(), blocks.end(),
            [](const WeightBlock& a, const WeightBlock& b) { return a.weight < b.weight; });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].weight < 2) throw std::invalid_argument("block weights must be >= 2");
    if (blocks[i].count < 1) throw std::invalid_argument("block counts must be positive");
    if (i > 0 && blocks[i].weight == blocks[i - 1].weight)
      throw std::invalid_argument("duplicate block weight");
  }

  auto t = std::make_shared<VarTable>();
  t->n_ = n;
  t->blocks_ = std::move(blocks);
  t->params_ = std::move(params);
  for (const auto& b : t->blocks_) t->codim_ += b.count;

  auto& v = t->vars_;
  for (int a = 0; a < n; ++a) v.push_back({"z" + std::to_string(a + 1), VarKind::kZ, 1, 1, a + 1});
  for (const auto& b : t->blocks_)
    for (int k = 0; k < b.count; ++k)
      v.push_back({w_name(b.weight, k + 1), VarKind::kW, b.weight, b.weight, k + 1});
  t->zbar_base_ = v.size();
  for (int a = 0; a < n; ++a)
    v.push_back({"conj(z" + std::to_string(a + 1) + ")", VarKind::kZBar, 1, 1, a + 1});
  t->wbar_base_ = v.size();
  for (const auto& b : t->blocks_)
    for (int k = 0; k < b.count; ++k)
      v.push_back({"conj(" + w_name(b.weight, k + 1) + ")", VarKind::kWBar, b.weight, b.weight,
                   k + 1});
  t->u_base_ = v.size();
  for (const auto& b : t->blocks_)
    for (int k = 0; k < b.count; ++k)
      v.push_back({"u" + std::to_string(b.weight) + "_" + std::to_string(k + 1), VarKind::kU,
                   b.weight, b.weight, k + 1});
  for (std::size_t p = 0; p < t->params_.size(); ++p) {
    const auto& name = t->params_[p];
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw std::invalid_argument("bad parameter name '" + name + "'");
    v.push_back({name, VarKind::kParam, 0, 0, static_cast<int>(p) + 1});
  }

  const std::size_t amb = static_cast<std::size_t>(t->ambient_dim());
  t->conj_.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < amb) {
      t->conj_[i] = t->zbar_base_ + i;
      t->conj_[t->zbar_base_ + i] = i;
    } else if (i >= t->u_base_) {
      t->conj_[i] = i;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i].name == v[j].name)
        throw std::invalid_argument("parameter name '" + v[i].name + "' collides");
  return t;
}

int VarTable::top_weight() const { return blocks_.empty() ? 1 : blocks_.back().weight; }

std::size_t VarTable::z(int a) const { return static_cast<std::size_t>(a); }

std::size_t VarTable::zbar(int a) const { return zbar_base_ + static_cast<std::size_t>(a); }

int VarTable::block_offset(int block) const {
  if (block < 0) return 0;
  int off = n_;
  for (int i = 0; i < block; ++i) off += blocks_[static_cast<std::size_t>(i)].count;
  return off;
}

std::size_t VarTable::w(int block, int b) const {
  return static_cast<std::size_t>(block_offset(block) + b);
}

std::size_t VarTable::wbar(int block, int b) const { return zbar_base_ + w(block, b); }

std::size_t VarTable::u(int block, int b) const {
  return u_base_ + static_cast<std::size_t>(block_offset(block) - n_ + b);
}

int VarTable::block_of_weight(int weight) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].weight == weight) return static_cast<int>(i);
  return -1;
}

std::optional<std::size_t> VarTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

}  // namespace msk
