#include "kernellab/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

namespace kernellab {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;
constexpr std::size_t kCifarRecordBytes = 3073;  // 1 label byte + 3 * 1024 pixels

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) throw IoError("read failure: " + path);
  return bytes;
}

std::uint32_t read_be32(const std::vector<std::uint8_t>& bytes, std::size_t offset) {
  return (static_cast<std::uint32_t>(bytes[offset]) << 24) |
         (static_cast<std::uint32_t>(bytes[offset + 1]) << 16) |
         (static_cast<std::uint32_t>(bytes[offset + 2]) << 8) |
         static_cast<std::uint32_t>(bytes[offset + 3]);
}

}  // namespace

IdxTensor load_idx(const std::string& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  if (bytes.size() < 4) throw FormatError("idx: file shorter than the magic field");
  IdxTensor tensor;
  tensor.magic = read_be32(bytes, 0);
  std::size_t n_dims = 0;
  if (tensor.magic == kImageMagic) {
    n_dims = 3;
  } else if (tensor.magic == kLabelMagic) {
    n_dims = 1;
  } else {
    throw FormatError("idx: unsupported magic");
  }
  const std::size_t header = 4 + 4 * n_dims;
  if (bytes.size() < header) throw FormatError("idx: truncated dimension header");
  std::size_t payload = 1;
  for (std::size_t d = 0; d < n_dims; ++d) {
    tensor.dims.push_back(read_be32(bytes, 4 + 4 * d));
    payload *= tensor.dims.back();
  }
  if (bytes.size() < header + payload) throw FormatError("idx: truncated payload");
  tensor.data.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header),
                     bytes.begin() + static_cast<std::ptrdiff_t>(header + payload));
  return tensor;
}

LabeledImages from_idx(const IdxTensor& images, const IdxTensor& labels, std::string source) {
  if (images.magic != kImageMagic) throw FormatError("from_idx: first tensor is not images");
  if (labels.magic != kLabelMagic) throw FormatError("from_idx: second tensor is not labels");
  if (images.dims[0] != labels.dims[0]) {
    throw FormatError("from_idx: image and label counts differ");
  }
  LabeledImages data;
  data.image_size = static_cast<std::size_t>(images.dims[1]) * images.dims[2];
  data.pixels = images.data;
  data.labels.reserve(labels.data.size());
  for (std::uint8_t byte : labels.data) data.labels.push_back(static_cast<int>(byte));
  data.source = std::move(source);
  return data;
}

LabeledImages load_cifar10(const std::string& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  if (bytes.empty() || bytes.size() % kCifarRecordBytes != 0) {
    throw FormatError("cifar10: file size is not a multiple of 3073");
  }
  const std::size_t records = bytes.size() / kCifarRecordBytes;
  LabeledImages data;
  data.image_size = kCifarRecordBytes - 1;
  data.source = path;
  data.labels.reserve(records);
  data.pixels.reserve(records * data.image_size);
  for (std::size_t r = 0; r < records; ++r) {
    const std::size_t offset = r * kCifarRecordBytes;
    const int label = static_cast<int>(bytes[offset]);
    if (label > 9) throw LabelError("cifar10: label byte exceeds 9");
    data.labels.push_back(label);
    data.pixels.insert(data.pixels.end(),
                       bytes.begin() + static_cast<std::ptrdiff_t>(offset + 1),
                       bytes.begin() + static_cast<std::ptrdiff_t>(offset + kCifarRecordBytes));
  }
  return data;
}

std::pair<PointSet, Eigen::VectorXd> two_class_subset(const LabeledImages& data, int label_pos,
                                                      int label_neg, int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("two_class_subset: n must be >= 1");
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < data.count(); ++i) {
    if (data.labels[i] == label_pos || data.labels[i] == label_neg) pool.push_back(i);
  }
  if (pool.size() < static_cast<std::size_t>(n)) {
    throw InsufficientDataError("two_class_subset: only " + std::to_string(pool.size()) +
                                " points carry the requested labels");
  }
  // partial Fisher-Yates: a uniform without-replacement draw, deterministic per seed
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), pool.size() - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[pick(rng)]);
  }

  const Eigen::Index d = static_cast<Eigen::Index>(data.image_size);
  PointSet points(n, d);
  Eigen::VectorXd labels(n);
  for (int i = 0; i < n; ++i) {
    const std::size_t row = pool[static_cast<std::size_t>(i)];
    const std::uint8_t* pixels = data.pixels.data() + row * data.image_size;
    double norm2 = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double v = static_cast<double>(pixels[j]);
      points(i, j) = v;
      norm2 += v * v;
    }
    if (norm2 == 0.0) throw ZeroImageError("two_class_subset: image with all-zero pixels");
    points.row(i) /= std::sqrt(norm2);
    labels(i) = data.labels[row] == label_pos ? 1.0 : -1.0;
  }
  return {std::move(points), std::move(labels)};
}

}  // namespace kernellab
