"""输出模块

- serialization: SlicePoly 的 JSON 序列化与校验
- formatters: 运算结果到 JSON 兼容对象的转换

使用示例：
    from src.output import deserialize, serialize, to_payload

    payload = serialize(f)
    g = deserialize(payload)
"""

from .formatters import FORMATTERS, format_poly, to_payload
from .serialization import BASIS, SlicePolyPayload, deserialize, dumps, serialize

__all__ = [
    "BASIS",
    "SlicePolyPayload",
    "serialize",
    "deserialize",
    "dumps",
    "FORMATTERS",
    "format_poly",
    "to_payload",
]
