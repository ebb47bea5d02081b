# Copyright 2026 The Authors.
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
"""Tests for the MovieLens converter."""

import json
import os
import sys
import tempfile
import unittest

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(HERE, "..", "..", "tools"))

import convert_movielens  # noqa: E402

FIXTURE = os.path.join(HERE, "..", "data", "movielens")


class SplitTitleTest(unittest.TestCase):

  def test_forms(self):
    split = convert_movielens.split_title
    self.assertEqual(split("Toy Story (1995)"), ("Toy Story", 1995))
    self.assertEqual(split("Matrix, The (1999)"), ("The Matrix", 1999))
    self.assertEqual(split("Untitled"), ("Untitled", None))
    self.assertEqual(split("Show (2005-2007)"), ("Show", 2005))


class ConvertTest(unittest.TestCase):

  def run_convert(self, *extra):
    with tempfile.TemporaryDirectory() as tmp:
      out = os.path.join(tmp, "catalog.jsonl")
      self.assertEqual(
          convert_movielens.main([FIXTURE, "-o", out, *extra]), 0)
      with open(out, encoding="utf-8") as f:
        return [json.loads(line) for line in f]

  def test_records(self):
    records = self.run_convert()
    self.assertEqual([r["id"] for r in records], ["ml1", "ml2"])
    toy = records[0]
    self.assertEqual(toy["title"], "Toy Story")
    self.assertEqual(toy["release_year"], 1995)
    self.assertEqual(toy["rating"], 9.0)
    self.assertEqual(toy["votes"], 2)
    self.assertEqual(toy["keywords"], ["pixar"])
    self.assertEqual(toy["item_url"], "https://www.imdb.com/title/tt0114709/")
    for r in records:
      for field in ("title", "genres", "release_year", "rating"):
        self.assertTrue(r[field], field)

  def test_min_votes_and_limit(self):
    self.assertEqual([r["id"] for r in self.run_convert("--min-votes", "2")],
                     ["ml1"])
    self.assertEqual(len(self.run_convert("--limit", "1")), 1)


if __name__ == "__main__":
  unittest.main()
