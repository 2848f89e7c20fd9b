# Copyright 2026 The Equivariant Trisection Diagrams Authors.
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
"""Runs an etd command with --json and validates its output against the schema."""
import json
import subprocess
import sys

import jsonschema


def main():
    schema_path, command = sys.argv[1], sys.argv[2:]
    with open(schema_path) as f:
        schema = json.load(f)
    run = subprocess.run(command + ["--json"], capture_output=True, text=True)
    if run.returncode not in (0, 2):
        sys.stderr.write(run.stderr)
        return 1
    jsonschema.validate(json.loads(run.stdout), schema)
    print("schema ok:", " ".join(command[1:]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
