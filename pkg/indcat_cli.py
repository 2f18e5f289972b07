#!/usr/bin/env python3
"""
indcat - 命令行入口点

本脚本是 indcat 的命令行入口点，用于启动命令行界面。
"""

import sys
from indcat.ui import run

if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\n\n程序已终止", file=sys.stderr)
        sys.exit(130)
