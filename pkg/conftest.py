# Copyright 2026 Jitesh Prakash Chaudhary
# Website: https://jiteshprakash.netlify.app/
#
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

import pytest

from parsing.arrangement_file import ArrangementDocument, read_document

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")


def load_corpus(name: str) -> ArrangementDocument:
    document, _ = read_document(os.path.join(CORPUS_DIR, name))
    return document


@pytest.fixture
def corpus_dir() -> str:
    return CORPUS_DIR


@pytest.fixture
def fig2() -> ArrangementDocument:
    return load_corpus("fig2.arr")


@pytest.fixture
def fig3() -> ArrangementDocument:
    return load_corpus("fig3.arr")


@pytest.fixture
def a16() -> ArrangementDocument:
    return load_corpus("a16-1.arr")


@pytest.fixture
def quad() -> ArrangementDocument:
    return load_corpus("quad.arr")


@pytest.fixture
def tri3() -> ArrangementDocument:
    return load_corpus("tri3.arr")


@pytest.fixture
def par2() -> ArrangementDocument:
    return load_corpus("par2.arr")


@pytest.fixture
def pencil3() -> ArrangementDocument:
    return load_corpus("pencil3.arr")


@pytest.fixture
def pencil4() -> ArrangementDocument:
    return load_corpus("pencil4.arr")


@pytest.fixture
def ico() -> ArrangementDocument:
    return load_corpus("ico16.arr")
