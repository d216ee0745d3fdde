#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "cli_config.hpp"

namespace lrts::cli {

std::string_view tool_version() noexcept;

/// What was run and how. `replay_args` is a complete `lrts run` argument
/// list that regenerates the same CSV rows from the same instance files.
struct RunManifest {
  RunOptions options;
  std::vector<std::string> replay_args;
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;
  std::vector<std::string> outputs;
};

/// Canonical argument list for `options` (every setting spelled out).
std::vector<std::string> replay_arguments(const RunOptions& options);

std::string manifest_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

/// Recorded arguments with every setting repeated in `overrides` dropped,
/// followed by the overrides.
std::vector<std::string> merge_replay_args(const std::vector<std::string>& recorded,
                                           const std::vector<std::string>& overrides);

/// Reads `replay_args` back from a manifest file.
std::vector<std::string> read_replay_args(const std::filesystem::path& path);

}  // namespace lrts::cli
