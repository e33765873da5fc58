"""运行时配置管理器

数值容差与求根参数集中在这里，支持从 JSON 配置文件加载、
CLI 覆盖以及测试中的临时调整。
"""

from pathlib import Path
from typing import Optional

from loguru import logger
from pydantic import BaseModel, Field


class ToleranceConfig(BaseModel):
    """容差配置"""

    # 相等判定: |x - y| <= eps_abs + eps_rel * max(|x|, |y|)
    eps_abs: float = Field(default=1e-9, gt=0, le=1e-2, description="绝对容差")
    eps_rel: float = Field(default=1e-9, gt=0, le=1e-2, description="相对容差")

    # 多项式
    eps_div: float = Field(default=1e-8, gt=0, le=1e-2, description="整除判定容差")
    eps_rank: float = Field(default=1e-8, gt=0, le=1e-2, description="分类秩判定阈值（奇异值比）")
    eps_root: float = Field(default=1e-8, gt=0, le=1e-2, description="根残差容差")
    eps_trim: float = Field(default=1e-14, gt=0, le=1e-6, description="首项系数相对截断下限")

    # 零点与几何
    eps_zero: float = Field(default=1e-7, gt=0, le=1e-2, description="球面/实点零值判定容差")
    eps_unit: float = Field(default=1e-6, gt=0, le=1e-2, description="虚单位漂移容差")
    eps_verify: float = Field(default=1e-7, gt=0, le=1e-2, description="求解结果回代校验容差")


class RootFinderConfig(BaseModel):
    """求根配置"""

    max_iter: int = Field(default=500, ge=10, le=100000, description="Aberth 迭代上限")
    restarts: int = Field(default=3, ge=1, le=10, description="扰动重启次数")
    cluster_slack: float = Field(default=10.0, ge=1.0, le=1e4, description="重根簇接受半径相对扰动半径估计的放大倍数")


class RuntimeConfig(BaseModel):
    """运行时配置"""

    tolerance: ToleranceConfig = Field(default_factory=ToleranceConfig)
    root_finder: RootFinderConfig = Field(default_factory=RootFinderConfig)


class RuntimeConfigManager:
    """运行时配置管理器

    进程内单例；首次创建时从环境变量初始化
    """

    _instance: Optional["RuntimeConfigManager"] = None
    _config: Optional[RuntimeConfig] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if self._config is None:
            self._init_from_env()

    @property
    def config(self) -> RuntimeConfig:
        """获取当前配置"""
        return self._config

    @property
    def tolerance(self) -> ToleranceConfig:
        """获取容差配置"""
        return self._config.tolerance

    @property
    def root_finder(self) -> RootFinderConfig:
        """获取求根配置"""
        return self._config.root_finder

    def _init_from_env(self) -> None:
        """从环境变量初始化配置"""
        from src.config import settings

        self._config = RuntimeConfig(
            root_finder=RootFinderConfig(max_iter=settings.root_max_iter),
        )
        if settings.tol is not None:
            self.override_tolerance(settings.tol)
        if settings.profile_file:
            self.load_from_file(settings.profile_file)

    def override_tolerance(self, tol: float) -> None:
        """用单一容差覆盖相等/整除/秩判定

        Args:
            tol: 新的基础容差，整除与秩阈值取其 10 倍
        """
        if tol <= 0:
            raise ValueError("Tolerance must be positive")
        self._config.tolerance = self._config.tolerance.model_copy(
            update={
                "eps_abs": tol,
                "eps_rel": tol,
                "eps_div": 10 * tol,
                "eps_rank": 10 * tol,
            }
        )
        logger.debug(f"全局容差已覆盖: tol={tol}")

    def update_tolerance(self, config: ToleranceConfig) -> None:
        """更新容差配置

        Args:
            config: 新的容差配置
        """
        self._config.tolerance = config

    def update_root_finder(self, config: RootFinderConfig) -> None:
        """更新求根配置

        Args:
            config: 新的求根配置
        """
        self._config.root_finder = config

    def load_from_file(self, path: str) -> bool:
        """从 JSON 文件加载配置

        Args:
            path: 配置文件路径

        Returns:
            是否加载成功
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
            self._config = RuntimeConfig.model_validate_json(text)
            logger.debug(f"从文件加载运行时配置成功: {path}")
            return True
        except Exception as e:
            logger.error(f"加载运行时配置失败: {e}")
            return False

    def save_to_file(self, path: str) -> bool:
        """保存配置到 JSON 文件

        Args:
            path: 配置文件路径

        Returns:
            是否保存成功
        """
        try:
            Path(path).write_text(self._config.model_dump_json(indent=2), encoding="utf-8")
            logger.info(f"运行时配置已保存: {path}")
            return True
        except Exception as e:
            logger.error(f"保存运行时配置失败: {e}")
            return False

    def reset(self) -> None:
        """恢复默认配置（重新读取环境变量）"""
        self._init_from_env()


def get_runtime_config() -> RuntimeConfigManager:
    """获取运行时配置管理器单例"""
    return RuntimeConfigManager()


def tolerance() -> ToleranceConfig:
    """当前容差配置的快捷访问"""
    return get_runtime_config().tolerance
