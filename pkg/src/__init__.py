"""slicereg: 四元数切片正则多项式计算工具"""

__version__ = "1.0.0"
