#!/usr/bin/env python3
# Copyright 2026 The scverify Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reads an SMT-LIB2 script on stdin (or from argv[1]) and runs it with
the cvc5 Python bindings, printing command output like the cvc5 binary."""

import sys

import cvc5


def main():
    text = open(sys.argv[1]).read() if len(sys.argv) > 1 else sys.stdin.read()
    solver = cvc5.Solver()
    # Constant arrays (default-initialized maps) need the extended theory.
    solver.setOption("arrays-exp", "true")
    symbols = cvc5.SymbolManager(solver)
    parser = cvc5.InputParser(solver, symbols)
    parser.setStringInput(cvc5.InputLanguage.SMT_LIB_2_6, text, "stdin")
    try:
        while True:
            command = parser.nextCommand()
            if command.isNull():
                break
            out = command.invoke(solver, symbols)
            if out:
                sys.stdout.write(out)
                sys.stdout.flush()
    except RuntimeError as e:
        sys.stdout.write('(error "%s")\n' % str(e).replace('"', "'"))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
