"""
测试包

包含对 indcat 各模块的测试。
"""
