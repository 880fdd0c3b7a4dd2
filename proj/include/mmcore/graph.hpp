#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mmcore/tensor.hpp"

namespace mmcore {

enum class OpKind {
  kLeaf,
  kConv2d,
  kRelu,
  kLinear,
  kMatMul,
  kAdd,
  kMul,
  kSigmoid,
  kTanh,
  kSliceCols,
  kConcatCols,
  kEmbedding,
  kBatchNorm,
  kBroadcastConcat,
  kSumPool,
  kSoftmaxXent,
  kRowMaskMix,
  kSpatialObjects,
  kPairConcat,
  kPairSum,
  kSpatialPermute,
  kDotConst,
};

// Reverse-mode tape. Nodes are appended in execution order, so the node id
// sequence is already a topological order: every parent id is smaller than
// its consumers. One Graph instance is confined to a single thread.
template <typename S>
class Graph {
 public:
  struct Node {
    OpKind kind;
    std::vector<int> parents;
    Shape shape;
    Buffer<S> value;
    Buffer<S> grad;  // allocated lazily the first time gradient reaches it
    bool requires = false;  // some leaf below this node wants a gradient
    std::function<void(Graph&, const Node&)> backward;  // empty for leaves
  };

  // Registers an externally created tensor as a leaf. If the tensor already
  // owns a gradient buffer (parameters do), backward accumulates into it;
  // otherwise the leaf is a constant and gradient flow stops there.
  Tensor<S> leaf(const Tensor<S>& t) {
    Tensor<S> out = t;
    Node n;
    n.kind = OpKind::kLeaf;
    n.shape = t.shape();
    n.value = t.buffer();
    n.grad = t.grad_buffer();
    n.requires = t.has_grad();
    out.node = push(std::move(n));
    return out;
  }

  // Registers the result of an op. `backward` receives the node itself so it
  // can read the output gradient and value.
  Tensor<S> op(OpKind kind, std::vector<int> parents, Tensor<S> result,
               std::function<void(Graph&, const Node&)> backward) {
    Node n;
    n.kind = kind;
    for (int p : parents)
      if (nodes_[static_cast<size_t>(p)].requires) n.requires = true;
    n.parents = std::move(parents);
    n.shape = result.shape();
    n.value = result.buffer();
    n.backward = std::move(backward);
    result.node = push(std::move(n));
    return result;
  }

  bool requires_grad(int id) const {
    return nodes_[static_cast<size_t>(id)].requires;
  }

  const Node& node(int id) const { return nodes_[static_cast<size_t>(id)]; }
  int size() const { return static_cast<int>(nodes_.size()); }

  std::span<const S> value_of(int id) const {
    const Node& n = nodes_[static_cast<size_t>(id)];
    return {n.value->data(), n.value->size()};
  }

  // Gradient accumulation target for node `id`; allocates zeros on first use.
  S* grad_acc(int id) {
    Node& n = nodes_[static_cast<size_t>(id)];
    if (!n.grad) n.grad = make_buffer<S>(n.shape.numel());
    return n.grad->data();
  }

  bool grad_reached(int id) const {
    return static_cast<bool>(nodes_[static_cast<size_t>(id)].grad);
  }

  // Reverse sweep from a scalar loss. Gradients of nodes the loss does not
  // reach stay untouched (a parameter's persistent grad buffer keeps the
  // zeros it started with). Parameter values are not modified.
  void backward(const Tensor<S>& loss) {
    if (loss.node < 0) throw ConfigError("backward: loss is not part of this graph");
    if (loss.numel() != 1) throw ConfigError("backward: loss must be scalar, got " + loss.shape().str());
    grad_acc(loss.node)[0] += S(1);
    for (int id = loss.node; id >= 0; --id) {
      const Node& n = nodes_[static_cast<size_t>(id)];
      if (n.grad && n.backward) n.backward(*this, n);
    }
  }

 private:
  int push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::vector<Node> nodes_;
};

}  // namespace mmcore
