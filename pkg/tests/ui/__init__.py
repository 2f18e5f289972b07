"""
命令行界面测试包
"""
