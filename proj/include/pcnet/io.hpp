#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcnet {

// Little-endian binary writer backed by an in-memory buffer.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f64(double v);
  void f64_array(const std::vector<double>& values);
  void magic(const char tag[5]);

  const std::vector<std::uint8_t>& buffer() const { return buf_; }
  void to_file(const std::string& path) const;

 private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::vector<std::uint8_t> bytes) : buf_(std::move(bytes)) {}
  static ByteReader from_file(const std::string& path);

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  double f64();
  std::vector<double> f64_array(std::size_t count);
  void expect_magic(const char tag[5], const std::string& what);
  bool exhausted() const { return pos_ == buf_.size(); }

 private:
  void need(std::size_t n) const;
  std::vector<std::uint8_t> buf_;
  std::size_t pos_ = 0;
};

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace pcnet
