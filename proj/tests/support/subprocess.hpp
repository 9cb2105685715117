#pragma once

// Minimal subprocess runner for driving the CLI from tests: runs a command
// through the shell with stdout/stderr captured to files in a scratch
// directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testproc {

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Scratch {
 public:
  explicit Scratch(const std::string& name)
      : dir_(std::filesystem::current_path() / name) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path file(const std::string& name,
                             const std::string& contents) const {
    const auto p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out << contents;
    return p;
  }

  CmdResult run(const std::string& command) const {
    const auto out_path = dir_ / "stdout.txt";
    const auto err_path = dir_ / "stderr.txt";
    const std::string full = command + " > \"" + out_path.string() +
                             "\" 2> \"" + err_path.string() + "\"";
    const int status = std::system(full.c_str());
    CmdResult result;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    if (status == -1)
      result.exit_code = -1;
    else if (WIFEXITED(status))
      result.exit_code = WEXITSTATUS(status);
    else
      result.exit_code = 128;
    return result;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace testproc
