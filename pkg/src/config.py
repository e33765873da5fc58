"""配置管理模块"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """应用配置

    环境变量统一使用 SLICEREG_ 前缀，例如 SLICEREG_TOL=1e-10
    """

    model_config = SettingsConfigDict(
        env_prefix="SLICEREG_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # 数值容差
    tol: Optional[float] = Field(default=None, gt=0, description="全局容差回退值（覆盖相等/整除/秩判定）")
    profile_file: str = Field(default="", description="容差配置文件路径（JSON）")

    # 求根
    root_max_iter: int = Field(default=500, ge=10, description="Aberth 迭代上限")

    # 日志
    log_level: str = Field(default="WARNING", description="日志级别")
    log_file: str = Field(default="", description="日志文件路径，留空则不写文件")


@lru_cache
def get_settings() -> Settings:
    """获取配置单例"""
    return Settings()


settings = get_settings()
