"""
数据加载测试包
"""
