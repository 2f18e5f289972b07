"""
indcat - 用户界面包

本包提供 indcat 的命令行界面。
"""

from .cli import run

__all__ = ['run']
