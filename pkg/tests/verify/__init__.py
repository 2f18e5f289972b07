"""
核对模块测试包
"""
