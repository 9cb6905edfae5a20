# Copyright 2026 The cfgkb Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

PRESETS = pathlib.Path(os.environ.get("CFGKB_PRESETS", "presets"))


@pytest.fixture(scope="session")
def software_source():
    return (PRESETS / "software.cfg").read_text()


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("CFGKB_CLI")
    if not path:
        pytest.skip("CFGKB_CLI not set")
    return path
