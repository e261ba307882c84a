#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
ncwalk - 配置管理工具
负责加载、验证和管理配置

配置加载优先级：
1. 默认配置 DEFAULT_CONFIG
2. 配置文件（参数 > CONFIG_FILE 环境变量 > config/config.json）
3. 环境变量 NCWALK_SECTION_KEY（.env 文件由 python-dotenv 载入）
"""

import os
import json
import copy
import logging
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

DEFAULT_SEED = 20240607

DEFAULT_CONFIG = {
    "seed": DEFAULT_SEED,
    "limits": {
        "max_state_degree": 12,
        "max_oracle_degree": 8
    },
    "simulation": {
        "workers": 1,
        "chunk_size": 20000,
        "progress": False,
        "check_interlacing": False
    },
    "ctmc": {
        "tail_bound": 0.005,
        "max_events": 200
    },
    "asymptotics": {
        "witness_ranks": 1
    },
    "output": {
        "format": "json",
        "dir": "output",
        "pretty_json": True
    },
    "logging": {
        "level": "WARNING",
        "file": "logs/ncwalk.log",
        "max_size": 10485760,
        "backup_count": 5
    },
    "verify": {
        "threads": 1,
        "suites": {
            "quick": {
                "moment_replicas": 100000,
                "spacelike_replicas": 200000,
                "timelike_replicas": 400000,
                "oracle_max_degree": 4,
                "semigroup_max_degree": 3,
                "gibbs_max_depth": 2,
                "asymptotics_max_k": 3
            },
            "full": {
                "moment_replicas": 100000,
                "spacelike_replicas": 1000000,
                "timelike_replicas": 1000000,
                "oracle_max_degree": 5,
                "semigroup_max_degree": 4,
                "gibbs_max_depth": 3,
                "asymptotics_max_k": 4
            }
        }
    }
}

# 配置验证规则
CONFIG_SCHEMA = {
    "seed": {"type": int, "required": True, "min": 0},
    "limits": {
        "max_state_degree": {"type": int, "required": True, "min": 1, "max": 16},
        "max_oracle_degree": {"type": int, "required": True, "min": 1, "max": 10}
    },
    "simulation": {
        "workers": {"type": int, "required": True, "min": 1, "max": 64},
        "chunk_size": {"type": int, "required": True, "min": 1},
        "progress": {"type": bool, "required": True},
        "check_interlacing": {"type": bool, "required": True}
    },
    "ctmc": {
        "tail_bound": {"type": float, "required": True, "min": 0},
        "max_events": {"type": int, "required": True, "min": 1}
    },
    "asymptotics": {
        "witness_ranks": {"type": int, "required": True, "min": 0, "max": 8}
    },
    "output": {
        "format": {"type": str, "required": True, "choices": ["json", "csv"]},
        "dir": {"type": str, "required": True},
        "pretty_json": {"type": bool, "required": True}
    },
    "logging": {
        "level": {"type": str, "required": True, "choices": ["DEBUG", "INFO", "WARNING", "ERROR"]},
        "file": {"type": str, "required": False},
        "max_size": {"type": int, "required": False, "min": 1024},
        "backup_count": {"type": int, "required": False, "min": 0}
    },
    "verify": {
        "threads": {"type": int, "required": True, "min": 1, "max": 32}
    }
}

ENV_PREFIX = 'NCWALK_'


class ConfigError(Exception):
    """配置错误异常"""
    pass


class ConfigManager:
    """配置管理器，负责加载和管理配置"""

    def __init__(self, config_file: Optional[str] = None, strict: bool = False):
        """
        初始化配置管理器

        Args:
            config_file (str): 配置文件路径，如果为None则依次尝试 CONFIG_FILE 环境变量和默认路径
            strict (bool): 为True时验证失败直接抛出 ConfigError
        """
        self.logger = logging.getLogger('config')
        self.strict = strict

        load_dotenv()

        if not config_file:
            config_file = os.getenv('CONFIG_FILE')

        if not config_file:
            root_dir = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
            config_file = os.path.join(root_dir, 'config', 'config.json')

        self.config_file = config_file
        self.config = self.load_config()
        self._validate_config()

    def load_config(self) -> Dict[str, Any]:
        """
        加载配置

        Returns:
            dict: 合并后的配置字典
        """
        config = copy.deepcopy(DEFAULT_CONFIG)

        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    file_config = json.load(f)
                config = self._merge_configs(config, file_config)
                self.logger.info(f"已加载配置文件: {self.config_file}")
            except (OSError, json.JSONDecodeError) as e:
                if self.strict:
                    raise ConfigError(f"无法从 {self.config_file} 加载配置: {e}") from e
                self.logger.error(f"无法从 {self.config_file} 加载配置: {str(e)}，将使用默认配置")
        else:
            self.logger.warning(f"配置文件不存在: {self.config_file}，将使用默认配置")

        env_config = self._load_from_env()
        if env_config:
            config = self._merge_configs(config, env_config)
            self.logger.info("已从环境变量加载配置")

        return config

    def _load_from_env(self) -> Dict[str, Any]:
        """从环境变量加载配置

        环境变量格式：NCWALK_SECTION_KEY，例如 NCWALK_SIMULATION_WORKERS。
        键名中的下划线按已知配置键匹配，因此 NCWALK_LIMITS_MAX_STATE_DEGREE 能找到 limits.max_state_degree

        Returns:
            Dict[str, Any]: 从环境变量加载的配置
        """
        env_config = {}

        for key, value in os.environ.items():
            if not key.startswith(ENV_PREFIX):
                continue
            path = self._resolve_env_path(key[len(ENV_PREFIX):].lower())
            if not path:
                self.logger.warning(f"忽略未知的环境变量: {key}")
                continue

            current = env_config
            for part in path[:-1]:
                current = current.setdefault(part, {})
            current[path[-1]] = self._convert_value(value)

        return env_config

    def _resolve_env_path(self, flat_key: str) -> List[str]:
        """把 section_key 形式的小写键还原成配置路径"""
        def walk(node, remaining):
            if not isinstance(node, dict):
                return None
            for name in sorted(node, key=len, reverse=True):
                if remaining == name:
                    return [name]
                if remaining.startswith(name + '_'):
                    rest = walk(node[name], remaining[len(name) + 1:])
                    if rest:
                        return [name] + rest
            return None

        return walk(DEFAULT_CONFIG, flat_key) or []

    def _convert_value(self, value: str) -> Any:
        """转换字符串值为适当的类型"""
        if value.lower() in ('true', 'yes'):
            return True
        if value.lower() in ('false', 'no'):
            return False

        try:
            return int(value)
        except ValueError:
            pass

        try:
            return float(value)
        except ValueError:
            pass

        return value

    def _merge_configs(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """递归合并配置"""
        result = base.copy()

        for key, value in override.items():
            if isinstance(value, dict) and key in result and isinstance(result[key], dict):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value

        return result

    def _validate_config(self) -> None:
        """验证配置

        Raises:
            ConfigError: strict 模式下配置无效
        """
        try:
            self._validate_object(self.config, CONFIG_SCHEMA, [])
        except ConfigError as e:
            if self.strict:
                raise
            self.logger.error(f"配置验证失败: {str(e)}")

    def _validate_object(self, obj: Dict[str, Any], schema: Dict[str, Any], path: List[str]) -> None:
        for key, field_schema in schema.items():
            if isinstance(field_schema, dict) and field_schema.get('required') and key not in obj:
                raise ConfigError(f"缺少必需字段: {'.'.join(path + [key])}")

        for key, value in obj.items():
            if key not in schema:
                continue
            field_schema = schema[key]

            # 没有 type 的规则表示嵌套对象
            if isinstance(field_schema, dict) and 'type' not in field_schema:
                if not isinstance(value, dict):
                    raise ConfigError(f"字段 {'.'.join(path + [key])} 应该是一个对象")
                self._validate_object(value, field_schema, path + [key])
            else:
                self._validate_field(value, field_schema, path + [key])

    def _validate_field(self, value: Any, schema: Dict[str, Any], path: List[str]) -> None:
        full_path = '.'.join(path)

        expected_type = schema.get('type')
        if expected_type is float:
            ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        elif expected_type is int:
            ok = isinstance(value, int) and not isinstance(value, bool)
        else:
            ok = expected_type is None or isinstance(value, expected_type)
        if not ok:
            raise ConfigError(f"字段 {full_path} 的类型应该是 {expected_type.__name__}")

        choices = schema.get('choices')
        if choices and value not in choices:
            raise ConfigError(f"字段 {full_path} 的值应该是以下之一: {', '.join(choices)}")

        min_value = schema.get('min')
        if min_value is not None and value < min_value:
            raise ConfigError(f"字段 {full_path} 的值应该大于或等于 {min_value}")

        max_value = schema.get('max')
        if max_value is not None and value > max_value:
            raise ConfigError(f"字段 {full_path} 的值应该小于或等于 {max_value}")

    def get(self, key: str, default: Any = None) -> Any:
        """
        获取配置项

        Args:
            key (str): 配置项键名，支持点号分隔的多级键名
            default: 默认值，如果配置项不存在则返回此值

        Returns:
            配置项的值
        """
        value = self.config
        for part in key.split('.'):
            if isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """设置配置项，支持点号分隔的多级键名"""
        parts = key.split('.')
        target = self.config
        for part in parts[:-1]:
            if part not in target:
                target[part] = {}
            elif not isinstance(target[part], dict):
                raise ConfigError(f"无法设置配置项 {key}，因为 {part} 不是字典")
            target = target[part]
        target[parts[-1]] = value

    def save(self, path: Optional[str] = None) -> None:
        """保存配置到文件"""
        path = path or self.config_file
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.config, f, ensure_ascii=False, indent=2)
        self.logger.info(f"已保存配置到文件: {path}")

    @property
    def seed(self) -> int:
        """默认随机种子，NCWALK_SEED 环境变量可以覆盖"""
        return int(self.get('seed', DEFAULT_SEED))
