
class PlanSyntaxException(Exception):
    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        self.message = 'Syntax error at line '+str(line)+', column '+str(column)+': '+reason
        super().__init__(self.message)


class UnknownAgentException(Exception):
    def __init__(self, name):
        self.message = 'Agent '+name+' not exist.'
        super().__init__(self.message)


class UnknownBeliefException(Exception):
    def __init__(self, name):
        self.message = 'Belief '+name+' not in the vocabulary.'
        super().__init__(self.message)


class InvalidBeliefSubsetException(Exception):
    def __init__(self, reason):
        self.message = 'Invalid belief subset: '+reason
        super().__init__(self.message)


class EmptyMaskException(Exception):
    def __init__(self):
        self.message = 'No legal belief to select.'
        super().__init__(self.message)


class MissingRangeException(Exception):
    def __init__(self, action):
        self.message = 'No parameter range for abstract action: '+action
        super().__init__(self.message)


class InvalidIntervalException(Exception):
    def __init__(self, parameter, low, high):
        self.message = 'Empty interval for '+parameter+': ['+str(low)+', '+str(high)+']'
        super().__init__(self.message)


class ScheduleInPastException(Exception):
    def __init__(self, time, now):
        self.message = 'Cannot schedule at '+str(time)+' before current time '+str(now)
        super().__init__(self.message)


class CampaignStageException(Exception):
    def __init__(self, stage, test_id, reason):
        self.stage = stage
        self.test_id = test_id
        self.message = 'Stage '+stage+' failed (test: '+str(test_id)+'): '+reason
        super().__init__(self.message)


class ModelNotTrainedException(Exception):
    def __init__(self):
        self.message = 'Model not trained.'
        super().__init__(self.message)


class IncorrectModelFileException(Exception):
    def __init__(self, expectedname, actualname):
        self.message = 'Incorrect model (expected: '+expectedname+' ; actual: '+actualname+')'
        super().__init__(self.message)


class NotImplementedException(Exception):
    def __init__(self):
        self.message = 'Method not implemented.'
        super().__init__(self.message)


class OperationNotDefinedException(Exception):
    def __init__(self, opname):
        self.message = 'Operation '+opname+' not defined'
        super().__init__(self.message)
