"""SlicePoly 的 JSON 表示

{"basis": ["1", "i", "j", "k"], "components": [[c0 升幂], [c1], [c2], [c3]]}
输出为规范形式（零分量为 []），输入允许尾部补零。
"""

import json
from typing import Any, Union

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.algebra.realpoly import RealPoly
from src.errors import SchemaError
from src.slice.slicepoly import SlicePoly

BASIS = ["1", "i", "j", "k"]


class SlicePolyPayload(BaseModel):
    """序列化结构"""

    model_config = ConfigDict(extra="forbid", strict=True, allow_inf_nan=False)

    basis: list[str] = Field(description="基底，固定为 1, i, j, k")
    components: list[list[float]] = Field(description="四个分量的升幂系数")

    @field_validator("basis")
    @classmethod
    def check_basis(cls, value: list[str]) -> list[str]:
        if value != BASIS:
            raise ValueError(f"basis must be {BASIS}")
        return value

    @field_validator("components")
    @classmethod
    def check_components(cls, value: list[list[float]]) -> list[list[float]]:
        if len(value) != 4:
            raise ValueError("components must hold exactly four coefficient lists")
        return value


def serialize(f: SlicePoly) -> dict[str, Any]:
    return {"basis": list(BASIS), "components": [list(c.coeffs) for c in f.components]}


def dumps(f: SlicePoly) -> str:
    return json.dumps(serialize(f))


def deserialize(data: Union[str, bytes, dict]) -> SlicePoly:
    """解析 JSON 文本或已解码的字典

    各分量按 RealPoly 的规范形式截断：尾部的零以及不超过 eps_trim·max|c| 的
    最高次系数会被丢弃，被截断时记录 debug 日志

    Raises:
        SchemaError: JSON 不合法或结构不符
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise SchemaError(f"Invalid JSON: {e}") from e
    try:
        payload = SlicePolyPayload.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f"Invalid slice polynomial payload: {e.errors()[0]['msg']}") from e
    components = [RealPoly(c) for c in payload.components]
    for name, raw, poly in zip(BASIS, payload.components, components):
        dropped = raw[len(poly):]
        if any(c != 0.0 for c in dropped):
            logger.debug(f"分量 {name} 截断了可忽略的高次系数: {dropped}")
    return SlicePoly(*components)
