"""
indcat.reports 包

JSON 文档、JSON 行格式与 CSV 输出。
"""
