"""EduAssist: chat core, ERD-to-SQL compiler, and course-feedback analyzer."""

__version__ = "0.1.0"
