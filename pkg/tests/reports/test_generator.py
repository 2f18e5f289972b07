"""
报告生成模块的单元测试
"""

import io
import json
import os
import shutil
import tempfile
import unittest

import pandas as pd

from indcat.core.polyalg import Polynomial
from indcat.core.treegraph import CaterpillarSpec
from indcat.reports.generator import (
    CSV_COLUMNS,
    records_dataframe,
    records_document,
    sweep_dataframe,
    sweep_lines,
    to_json,
    write_csv,
    write_sweep_jsonl,
)
from indcat.verify.harness import check_base_case, check_shift_lemma
from indcat.verify.sweep import SweepConfig, sweep_family


class TestReportGenerator(unittest.TestCase):
    """报告生成模块的单元测试"""

    @classmethod
    def setUpClass(cls):
        cls.sweep = sweep_family(SweepConfig(specs=[CaterpillarSpec((3, 4)), CaterpillarSpec((1, 2, 1))]))

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_records_document(self):
        records = [check_base_case(4), check_base_case(5),
                   check_shift_lemma(Polynomial((1, 6, 7, 4, 1)), 3)]
        document = records_document(records)
        self.assertEqual(document["summary"],
                         {"conform": 1, "nonconform": 1, "hypothesis-not-met": 1})
        self.assertEqual(len(document["records"]), 3)
        text = to_json(document)
        self.assertEqual(json.loads(text), document)
        self.assertEqual(text, to_json(records_document(records)))

    def test_big_coefficients_stay_strings(self):
        big = 3 ** 90
        document = {"p": Polynomial((1, big)).to_strings()}
        self.assertIn(f'"{big}"', to_json(document))

    def test_sweep_lines(self):
        lines = list(sweep_lines(self.sweep))
        self.assertEqual(len(lines), 3)
        first, last = json.loads(lines[0]), json.loads(lines[-1])
        self.assertEqual(first["type"], "record")
        self.assertEqual(first["spec"], {"m": [3, 4], "n": 2})
        self.assertEqual(last["type"], "summary")
        self.assertEqual(last["instances"], 2)
        self.assertEqual(last["nonconform_specs"], ["1,2,1"])
        self.assertTrue(last["config"]["explicit_specs"])

    def test_write_sweep_jsonl(self):
        path = os.path.join(self.temp_dir, "out", "sweep.jsonl")
        write_sweep_jsonl(self.sweep, path)
        with open(path, encoding="utf-8") as f:
            self.assertEqual(f.read().splitlines(), list(sweep_lines(self.sweep)))
        buffer = io.StringIO()
        write_sweep_jsonl(self.sweep, buffer)
        self.assertEqual(buffer.getvalue().count("\n"), 3)

    def test_sweep_csv(self):
        frame = sweep_dataframe(self.sweep)
        self.assertEqual(list(frame.columns), CSV_COLUMNS)
        path = os.path.join(self.temp_dir, "sweep.csv")
        text = write_csv(frame, path)
        self.assertTrue(text.startswith("spec,n,cross_validation,theorem,mode,k,d\n"))
        loaded = pd.read_csv(path, dtype=str)
        self.assertEqual(loaded.loc[0, "spec"], "3,4")
        self.assertEqual(loaded.loc[1, "cross_validation"], "nonconform")

    def test_records_csv(self):
        frame = records_dataframe([check_base_case(3)])
        self.assertEqual(frame.loc[0, "verdict"], "nonconform")
        self.assertEqual(json.loads(frame.loc[0, "inputs"]), {"m1": 3})
        buffer = io.StringIO()
        write_csv(frame, buffer)
        self.assertIn("check_base_case", buffer.getvalue())


if __name__ == '__main__':
    unittest.main()
