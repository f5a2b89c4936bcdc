import os
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    # API Settings
    API_VERSION: str = os.getenv("API_VERSION", "v1")
    API_PREFIX: str = os.getenv("API_PREFIX", f"/api/{API_VERSION}")
    DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # Resource guard shared by determinization, products, atom enumeration
    # and semigroup closure
    MAX_STATES: int = int(os.getenv("MAX_STATES", "1000000"))

    # Reports
    REPORT_SCHEMA_VERSION: str = os.getenv("REPORT_SCHEMA_VERSION", "1")
    WORD_ENUMERATION_LIMIT: int = int(os.getenv("WORD_ENUMERATION_LIMIT", "8"))

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"


# Create settings instance
settings = Settings()
