#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kernellab/common.hpp"
#include "kernellab/errors.hpp"

namespace kernellab {

/// Parsed IDX tensor. Header: magic (big-endian), then one big-endian uint32
/// per dimension, then row-major unsigned bytes. Accepted magics:
/// 0x00000803 (3-d image tensor) and 0x00000801 (1-d label vector).
struct IdxTensor {
  std::uint32_t magic = 0;
  std::vector<std::uint32_t> dims;
  std::vector<std::uint8_t> data;
};

IdxTensor load_idx(const std::string& path);

/// Byte images with small-integer labels. Pixels are row-major per image
/// (channel-planar for CIFAR-10), values 0..255.
struct LabeledImages {
  std::vector<std::uint8_t> pixels;
  std::size_t image_size = 0;  // bytes per image (784 or 3072)
  std::vector<int> labels;
  std::string source;

  std::size_t count() const { return labels.size(); }
};

/// Pair an image tensor with its label vector. Counts must agree.
LabeledImages from_idx(const IdxTensor& images, const IdxTensor& labels, std::string source);

/// CIFAR-10 binary batch: records of 3073 bytes, 1 label byte (0..9) plus
/// 3072 channel-planar pixel bytes. File size must be a multiple of 3073.
LabeledImages load_cifar10(const std::string& path);

/// n points drawn without replacement from the pooled two classes, flattened,
/// and scaled to unit Euclidean norm; labels are +1 for label_pos and -1 for
/// label_neg. Deterministic given the seed. Throws InsufficientDataError when
/// the pool is too small and ZeroImageError on an all-zero image.
std::pair<PointSet, Eigen::VectorXd> two_class_subset(const LabeledImages& data, int label_pos,
                                                      int label_neg, int n, std::uint64_t seed);

}  // namespace kernellab
