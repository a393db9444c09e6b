#include "ftskit/adapter.hh"

#include <sys/wait.h>
#include <unistd.h>

#include <csignal>

namespace ftskit {

AdapterPort::AdapterPort(const std::string& command) {
  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    throw Error("adapter: cannot create pipes");
  }
  const pid_t pid = fork();
  if (pid < 0) throw Error("adapter: cannot fork");
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);
  pid_ = pid;
  to_child_ = fdopen(to_child[1], "w");
  from_child_ = fdopen(from_child[0], "r");
  if (to_child_ == nullptr || from_child_ == nullptr) {
    throw Error("adapter: cannot open pipe streams");
  }
}

AdapterPort::~AdapterPort() {
  if (to_child_ != nullptr) std::fclose(to_child_);
  if (from_child_ != nullptr) std::fclose(from_child_);
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (waitpid(static_cast<pid_t>(pid_), &status, WNOHANG) != 0) return;
      usleep(10000);
    }
    kill(static_cast<pid_t>(pid_), SIGTERM);
    waitpid(static_cast<pid_t>(pid_), &status, 0);
  }
}

void AdapterPort::send(const std::string& line) {
  if (std::fputs((line + "\n").c_str(), to_child_) == EOF || std::fflush(to_child_) != 0) {
    throw Error("adapter: the external implementation closed its input");
  }
}

std::string AdapterPort::receive() {
  std::string line;
  int c = 0;
  while ((c = std::fgetc(from_child_)) != EOF && c != '\n') {
    line.push_back(static_cast<char>(c));
  }
  if (c == EOF && line.empty()) {
    throw Error("adapter: the external implementation closed its output");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void AdapterPort::reset() { send("R"); }

bool AdapterPort::apply(const Action& a) {
  switch (a.kind) {
    case ActionKind::Input:
      send("I " + a.name);
      return true;
    case ActionKind::Output:
    case ActionKind::Delta: {
      send("?");
      const std::string reply = receive();
      if (reply == "Q") return a.is_delta();
      if (reply.rfind("O ", 0) == 0) {
        return a.kind == ActionKind::Output && a.name == reply.substr(2);
      }
      throw Error("adapter: protocol violation, unexpected reply '" + reply + "'");
    }
    case ActionKind::Tau:
      break;
  }
  throw Error("adapter: internal actions cannot be applied");
}

}  // namespace ftskit
