"""
集成测试包

按验收标准逐条核对整套工具。
"""
