"""
核心模块测试包

包含对多项式运算、树、形态分类与毛毛虫递推的测试。
"""
