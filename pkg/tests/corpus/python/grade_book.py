"""成绩册：按学生记录分数并计算平均分。"""


class GradeBook:
    """一个班级的成绩册。"""

    def __init__(self):
        # 学生名到分数列表的映射
        self.scores = {}

    def add_score(self, student, score):
        """记录一次成绩。分数允许为零。"""
        if student not in self.scores:
            self.scores[student] = []
        self.scores[student].append(score)

    def average(self, student):
        """某个学生的平均分；没有成绩时返回 None。"""
        marks = self.scores.get(student)
        if not marks:
            return None
        return sum(marks) / len(marks)

    def class_average(self):
        # 全班平均：先算每人均分，再取平均
        values = [self.average(s) for s in self.scores]
        values = [v for v in values if v is not None]
        if not values:
            return None
        return sum(values) / len(values)
