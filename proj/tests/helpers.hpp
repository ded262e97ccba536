// Shared test utilities: deterministic generators for random states and
// operations, and a tiny subprocess harness for driving the CLI binary.
// Framework-free so both the gtest suites and the acceptance runner can use
// it.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <pgraph/graph.hpp>
#include <pgraph/op.hpp>

namespace testutil {

inline pgraph::GraphState random_state(std::mt19937_64& rng, std::size_t n) {
  std::vector<pgraph::NodeId> succ0(n), succ1(n);
  for (std::size_t i = 0; i < n; ++i) {
    succ0[i] = static_cast<pgraph::NodeId>(rng() % n);
    succ1[i] = static_cast<pgraph::NodeId>(rng() % n);
  }
  return pgraph::GraphState(n, std::move(succ0), std::move(succ1));
}

inline pgraph::Path random_path(std::mt19937_64& rng, std::size_t len) {
  pgraph::Path path;
  path.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    path.push_back((rng() & 1) ? pgraph::Label::one : pgraph::Label::zero);
  }
  return path;
}

// target length 1..max_len written (b0 plus up to max_len-1 path steps),
// source length 0..max_len.
inline pgraph::PrimitiveOp random_op(std::mt19937_64& rng, std::size_t n,
                                     std::size_t max_len = 4) {
  pgraph::PrimitiveOp op;
  op.origin = static_cast<pgraph::NodeId>(rng() % n);
  op.assigned_label = (rng() & 1) ? pgraph::Label::one : pgraph::Label::zero;
  op.target_path = random_path(rng, rng() % max_len);
  op.source_path = random_path(rng, rng() % (max_len + 1));
  return op;
}

inline pgraph::GraphState self_loop_state(std::size_t n) {
  std::vector<pgraph::NodeId> loop(n);
  for (std::size_t i = 0; i < n; ++i) loop[i] = static_cast<pgraph::NodeId>(i);
  return pgraph::GraphState(n, loop, loop);
}

// The three-node state used across the examples:
// succ0 = [1,1,2], succ1 = [0,2,1].
inline pgraph::GraphState example_state_s0() {
  return pgraph::GraphState(3, {1, 1, 2}, {0, 2, 1});
}

struct ToolResult {
  int exit_code = -1;
  std::string out;
};

// Runs `command` through the shell, capturing stdout. Callers append their
// own stderr redirection when they want it captured.
inline ToolResult run_command(const std::string& command) {
  ToolResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 100; ++attempt) {
      auto candidate = base / ("pgraph_test_" + std::to_string(::getpid()) + "_" +
                               std::to_string(counter_++));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("could not create a temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto file = path_ / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file;
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace testutil
