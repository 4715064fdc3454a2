#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "kernellab/dataset_io.hpp"
#include "kernellab/kernels.hpp"

using namespace kernellab;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) {
    path = std::filesystem::temp_directory_path() / name;
  }
  ~TempFile() { std::filesystem::remove(path); }
  void write(const std::vector<std::uint8_t>& bytes) const {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
};

void push_be32(std::vector<std::uint8_t>* bytes, std::uint32_t value) {
  bytes->push_back(static_cast<std::uint8_t>(value >> 24));
  bytes->push_back(static_cast<std::uint8_t>(value >> 16));
  bytes->push_back(static_cast<std::uint8_t>(value >> 8));
  bytes->push_back(static_cast<std::uint8_t>(value));
}

std::vector<std::uint8_t> idx_labels(const std::vector<std::uint8_t>& labels) {
  std::vector<std::uint8_t> bytes;
  push_be32(&bytes, 0x00000801);
  push_be32(&bytes, static_cast<std::uint32_t>(labels.size()));
  bytes.insert(bytes.end(), labels.begin(), labels.end());
  return bytes;
}

std::vector<std::uint8_t> idx_images(std::uint32_t count, std::uint32_t rows,
                                     std::uint32_t cols,
                                     const std::vector<std::uint8_t>& payload) {
  std::vector<std::uint8_t> bytes;
  push_be32(&bytes, 0x00000803);
  push_be32(&bytes, count);
  push_be32(&bytes, rows);
  push_be32(&bytes, cols);
  bytes.insert(bytes.end(), payload.begin(), payload.end());
  return bytes;
}

}  // namespace

TEST_SUITE("dataset_io") {

TEST_CASE("label vectors parse with exact counts") {
  TempFile file("kl_labels_test.idx");
  file.write(idx_labels({5, 0, 9}));
  const IdxTensor tensor = load_idx(file.path.string());
  CHECK(tensor.magic == 0x00000801);
  REQUIRE(tensor.dims.size() == 1);
  CHECK(tensor.dims[0] == 3);
  REQUIRE(tensor.data.size() == 3);
  CHECK(tensor.data[0] == 5);
  CHECK(tensor.data[2] == 9);
}

TEST_CASE("image tensors parse and round-trip their payload") {
  const std::vector<std::uint8_t> payload{10, 20, 30, 40};
  TempFile file("kl_images_test.idx");
  file.write(idx_images(1, 2, 2, payload));
  const IdxTensor tensor = load_idx(file.path.string());
  CHECK(tensor.magic == 0x00000803);
  REQUIRE(tensor.dims.size() == 3);
  CHECK(tensor.dims[0] == 1);
  CHECK(tensor.dims[1] == 2);
  CHECK(tensor.dims[2] == 2);
  CHECK(tensor.data == payload);
}

TEST_CASE("unsupported magic and truncation raise format errors") {
  TempFile bad_magic("kl_badmagic_test.idx");
  std::vector<std::uint8_t> bytes;
  push_be32(&bytes, 0x00000802);
  push_be32(&bytes, 1);
  bytes.push_back(0);
  bad_magic.write(bytes);
  CHECK_THROWS_AS(load_idx(bad_magic.path.string()), FormatError);

  TempFile truncated("kl_trunc_test.idx");
  truncated.write(idx_images(2, 2, 2, {1, 2, 3, 4, 5}));  // needs 8 payload bytes
  CHECK_THROWS_AS(load_idx(truncated.path.string()), FormatError);

  CHECK_THROWS_AS(load_idx("/nonexistent/kl_missing.idx"), IoError);
}

TEST_CASE("cifar batches parse records of 3073 bytes") {
  std::vector<std::uint8_t> bytes(2 * 3073, 7);
  bytes[0] = 1;     // label of record 0
  bytes[3073] = 7;  // label of record 1 ("horse" in the standard class order)
  TempFile file("kl_cifar_test.bin");
  file.write(bytes);
  const LabeledImages data = load_cifar10(file.path.string());
  CHECK(data.count() == 2);
  CHECK(data.image_size == 3072);
  CHECK(data.labels[0] == 1);
  CHECK(data.labels[1] == 7);

  TempFile badsize("kl_cifar_badsize.bin");
  badsize.write(std::vector<std::uint8_t>(3074, 0));
  CHECK_THROWS_AS(load_cifar10(badsize.path.string()), FormatError);

  std::vector<std::uint8_t> badlabel(3073, 0);
  badlabel[0] = 10;
  TempFile badlabel_file("kl_cifar_badlabel.bin");
  badlabel_file.write(badlabel);
  CHECK_THROWS_AS(load_cifar10(badlabel_file.path.string()), LabelError);
}

TEST_CASE("two-class subsets normalize to the sphere and keep both labels") {
  LabeledImages data;
  data.image_size = 4;
  data.source = "synthetic";
  for (int i = 0; i < 40; ++i) {
    data.labels.push_back(i % 4);  // labels 0..3, ten each
    for (int j = 0; j < 4; ++j) {
      data.pixels.push_back(static_cast<std::uint8_t>(1 + (i * 4 + j) % 250));
    }
  }
  const auto [x, y] = two_class_subset(data, 1, 3, 12, 99);
  CHECK(x.rows() == 12);
  int pos = 0, neg = 0;
  for (int i = 0; i < 12; ++i) {
    CHECK(x.row(i).norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK((y(i) == 1.0 || y(i) == -1.0));
    (y(i) > 0 ? pos : neg) += 1;
  }
  CHECK(pos + neg == 12);
  // every produced point feeds the sphere-domain kernel without complaint
  const KernelSpec ntk = KernelSpec::ntk(1);
  for (int i = 0; i < 12; ++i) ntk.check_point(x.row(i));

  const auto [x2, y2] = two_class_subset(data, 1, 3, 12, 99);
  CHECK((x - x2).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(two_class_subset(data, 1, 3, 21, 7), InsufficientDataError);

  LabeledImages zero;
  zero.image_size = 2;
  zero.labels = {0, 1};
  zero.pixels = {0, 0, 5, 5};
  CHECK_THROWS_AS(two_class_subset(zero, 0, 1, 2, 1), ZeroImageError);
}

}  // TEST_SUITE
