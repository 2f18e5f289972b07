"""
报告生成测试包
"""
