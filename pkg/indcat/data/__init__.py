"""
indcat.data 包

配置与输入文件的加载。
"""
