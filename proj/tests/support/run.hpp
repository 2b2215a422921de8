#ifndef AMPCYL_TESTS_RUN_HPP
#define AMPCYL_TESTS_RUN_HPP

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace run {

struct Result {
  int exit_code;
  std::string out;
};

// Runs the CLI with the given argument string; stdout captured, stderr merged.
inline Result cli(const std::string& args) {
  std::string cmd = std::string("'") + AMPCYL_CLI_PATH + "' " + args + " 2>&1";
  Result r{-1, ""};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace run

#endif // AMPCYL_TESTS_RUN_HPP
